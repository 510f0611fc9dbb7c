#include "signpos/camera.hpp"

#include <algorithm>
#include <cmath>

namespace signpos {

Eigen::Vector2d project(const PinholeIntrinsics& k, const Eigen::Vector3d& p_cam) {
  if (!(p_cam.z() > 0.0)) throw NonPositiveDepth();
  return {k.fx * p_cam.x() / p_cam.z() + k.cx, k.fy * p_cam.y() / p_cam.z() + k.cy};
}

Eigen::Vector3d unproject(const PinholeIntrinsics& k, const Eigen::Vector2d& pixel, double depth) {
  if (!(depth > 0.0)) throw NonPositiveDepth("unproject: depth must be positive");
  return {(pixel.x() - k.cx) / k.fx * depth, (pixel.y() - k.cy) / k.fy * depth, depth};
}

namespace {

double aggregate(std::vector<double> values, AggregationMode mode) {
  if (mode == AggregationMode::Mean) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  }
  // median: midpoint of the two central order statistics for even counts
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

PinholeIntrinsics aggregate_intrinsics(const IntrinsicsEstimateSeries& series,
                                       AggregationMode mode,
                                       bool turns_only,
                                       const TurnRanges& turn_ranges) {
  std::vector<double> fx, fy, cx, cy;
  for (const auto& e : series.estimates) {
    if (turns_only && !turn_ranges.contains(e.pair_index)) continue;
    fx.push_back(e.fx);
    fy.push_back(e.fy);
    cx.push_back(e.cx);
    cy.push_back(e.cy);
  }
  if (fx.empty()) {
    if (turns_only) throw NoTurnEstimates();
    throw Error("aggregate_intrinsics: empty estimate series");
  }
  PinholeIntrinsics k;
  k.fx = aggregate(fx, mode);
  k.fy = aggregate(fy, mode);
  k.cx = aggregate(cx, mode);
  k.cy = aggregate(cy, mode);
  k.width = series.width;
  k.height = series.height;
  return k;
}

PinholeIntrinsics perturb_intrinsics(const PinholeIntrinsics& k, double df_pct, double dc_pct) {
  PinholeIntrinsics out = k;
  out.fx = k.fx * (1.0 + df_pct / 100.0);
  out.fy = k.fy * (1.0 + df_pct / 100.0);
  out.cx = k.cx * (1.0 + dc_pct / 100.0);
  out.cy = k.cy * (1.0 + dc_pct / 100.0);
  if (!out.valid())
    throw InvalidPerturbation("perturb_intrinsics: df=" + std::to_string(df_pct) + "% dc=" +
                              std::to_string(dc_pct) + "% violates intrinsics invariants");
  return out;
}

}  // namespace signpos
