#pragma once

#include <Eigen/Core>
#include <vector>

#include "signpos/errors.hpp"
#include "signpos/turns.hpp"

namespace signpos {

/// Pinhole intrinsics. fx, fy, cx, cy in pixels; no distortion model.
struct PinholeIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  bool valid() const {
    return fx > 0.0 && fy > 0.0 && width > 0 && height > 0 &&
           cx > 0.0 && cx < width && cy > 0.0 && cy < height;
  }
  Eigen::Matrix3d matrix() const {
    Eigen::Matrix3d k;
    k << fx, 0, cx, 0, fy, cy, 0, 0, 1;
    return k;
  }
};

/// Per-image-pair intrinsics estimates from a self-calibration provider.
struct IntrinsicsEstimate {
  int pair_index = 0;  // index of the first frame of the pair
  double fx = 0.0, fy = 0.0, cx = 0.0, cy = 0.0;
};

struct IntrinsicsEstimateSeries {
  std::vector<IntrinsicsEstimate> estimates;
  int width = 0;
  int height = 0;
};

enum class AggregationMode { Mean, Median };

/// Project a camera-frame point to pixels. Throws NonPositiveDepth for z <= 0.
Eigen::Vector2d project(const PinholeIntrinsics& k, const Eigen::Vector3d& p_cam);

/// Inverse projection at the given metric depth: depth * K^-1 * [u v 1]^T.
Eigen::Vector3d unproject(const PinholeIntrinsics& k, const Eigen::Vector2d& pixel, double depth);

/// Aggregate a per-pair estimate series into one set of intrinsics. Each
/// parameter is aggregated independently. With turns_only, a pair is included
/// when its first frame lies inside a turn range; throws NoTurnEstimates when
/// nothing qualifies.
PinholeIntrinsics aggregate_intrinsics(const IntrinsicsEstimateSeries& series,
                                       AggregationMode mode,
                                       bool turns_only = false,
                                       const TurnRanges& turn_ranges = {});

/// Scale focal lengths by (1 + df_pct/100) and the principal point by
/// (1 + dc_pct/100). Throws InvalidPerturbation if the result is invalid.
PinholeIntrinsics perturb_intrinsics(const PinholeIntrinsics& k, double df_pct, double dc_pct);

}  // namespace signpos
