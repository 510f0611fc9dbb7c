#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signpos/errors.hpp"
#include "signpos/geodesy.hpp"

namespace signpos {

/// One 2D detection of a sign. The observation point is the bbox center.
struct SignObservation {
  int track_id = 0;
  int frame_id = 0;
  int class_id = 0;
  double x = 0.0, y = 0.0, w = 0.0, h = 0.0;  // bbox, pixels

  Eigen::Vector2d center() const { return {x + w / 2.0, y + h / 2.0}; }
};

/// All observations of one physical sign, ordered by frame.
struct SignTrack {
  int track_id = 0;
  int class_id = 0;
  std::vector<SignObservation> observations;

  std::vector<int> frame_ids() const {
    std::vector<int> out;
    out.reserve(observations.size());
    for (const auto& o : observations) out.push_back(o.frame_id);
    return out;
  }
};

enum class Method { AFull, AShort, B };
enum class SignStatus { Ok, TriangulationFailed, Skipped };

std::string to_string(Method m);
std::string to_string(SignStatus s);

/// Final per-sign output: absolute position (ENU and, once an origin is
/// known, geodetic) plus camera-frame positions per observing frame.
struct SignPositionResult {
  int track_id = 0;
  int class_id = 0;
  std::optional<Eigen::Vector3d> position_enu;
  std::optional<GeodeticCoord> position_geodetic;
  std::map<int, Eigen::Vector3d> relative_positions;
  Method method = Method::AFull;
  SignStatus status = SignStatus::Ok;
  std::string reason;      // set when status != Ok
  std::string provenance;  // e.g. which trajectory variant fed rel/abs
  bool ba_converged = true;

  bool ok() const { return status == SignStatus::Ok; }
};

/// Drops observations whose bbox comes within margin pixels of any image
/// border. Throws EmptyTrack if nothing survives.
SignTrack filter_edge_observations(const SignTrack& track, double margin, int image_w, int image_h);

/// Groups a flat detection list into per-track SignTracks (sorted by frame).
/// Throws ParseError on duplicate frames or mixed class ids within a track.
std::vector<SignTrack> group_into_tracks(std::vector<SignObservation> detections);

}  // namespace signpos
