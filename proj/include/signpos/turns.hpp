#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

namespace signpos {

/// Inclusive [start_frame, end_frame] ranges, sorted and non-overlapping.
struct TurnRanges {
  std::vector<std::pair<int, int>> ranges;

  bool empty() const { return ranges.empty(); }
  bool contains(int frame) const {
    for (const auto& [s, e] : ranges)
      if (frame >= s && frame <= e) return true;
    return false;
  }
};

/// Ramer-Douglas-Peucker simplification of a 2D polyline. Returns the sorted
/// indices of kept vertices; first and last are always kept. Every dropped
/// point lies within epsilon of the segment joining its enclosing kept pair.
std::vector<int> rdp_simplify(const std::vector<Eigen::Vector2d>& polyline, double epsilon);

/// Turn sub-sequence extraction: interior RDP vertices of the (east, north)
/// track become turn centers, expanded by half_window frames on each side,
/// clamped to [0, n-1], overlapping ranges merged.
TurnRanges extract_turn_ranges(const std::vector<Eigen::Vector2d>& gps_en,
                               double epsilon,
                               int half_window);

}  // namespace signpos
