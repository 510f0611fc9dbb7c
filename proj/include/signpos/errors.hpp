#pragma once

#include <stdexcept>
#include <string>

namespace signpos {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Camera / projection
struct NonPositiveDepth : Error {
  explicit NonPositiveDepth(const std::string& msg = "point has non-positive depth") : Error(msg) {}
};
struct InvalidPerturbation : Error {
  explicit InvalidPerturbation(const std::string& msg) : Error(msg) {}
};
struct NoTurnEstimates : Error {
  explicit NoTurnEstimates(const std::string& msg = "no intrinsics estimate falls inside a turn range") : Error(msg) {}
};

// Alignment / trajectory
struct DegenerateConfiguration : Error {
  explicit DegenerateConfiguration(const std::string& msg) : Error(msg) {}
};
struct InsufficientOverlap : Error {
  explicit InsufficientOverlap(const std::string& msg) : Error(msg) {}
};

// Positioning
struct DegenerateRays : Error {
  explicit DegenerateRays(const std::string& msg = "rays are parallel, mid-point system is singular") : Error(msg) {}
};
struct EmptyTrack : Error {
  explicit EmptyTrack(const std::string& msg) : Error(msg) {}
};
struct BehindCameraInit : Error {
  explicit BehindCameraInit(const std::string& msg = "initial point lies behind every observing camera") : Error(msg) {}
};
struct StationaryFrame : Error {
  explicit StationaryFrame(const std::string& msg = "relative translation too small, scale undefined") : Error(msg) {}
};
struct InvalidDepthSample : Error {
  explicit InvalidDepthSample(const std::string& msg) : Error(msg) {}
};
struct NoValidHypotheses : Error {
  explicit NoValidHypotheses(const std::string& msg = "every depth hypothesis was discarded or invalid") : Error(msg) {}
};
struct NoCalibrationAvailable : Error {
  explicit NoCalibrationAvailable(const std::string& msg = "no usable calibration source in bundle") : Error(msg) {}
};

// I/O and scene generation
struct ParseError : Error {
  ParseError(const std::string& file, int line, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ": " + msg), file_path(file), line_number(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_number(-1) {}
  std::string file_path;
  int line_number;
};
struct FrameMismatch : Error {
  explicit FrameMismatch(const std::string& msg) : Error(msg) {}
};
struct InfeasibleSpec : Error {
  explicit InfeasibleSpec(const std::string& msg) : Error(msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace signpos
