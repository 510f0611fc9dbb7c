#include "signpos/turns.hpp"

#include <algorithm>
#include <cmath>

namespace signpos {

namespace {

// Distance from p to segment [a, b]; clamped so the within-epsilon guarantee
// holds against the simplified polyline itself, not the infinite line.
double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

void rdp_recurse(const std::vector<Eigen::Vector2d>& pts, int first, int last, double epsilon,
                 std::vector<int>& kept) {
  double max_dist = -1.0;
  int split = -1;
  for (int i = first + 1; i < last; ++i) {
    const double d = segment_distance(pts[i], pts[first], pts[last]);
    if (d > max_dist) {
      max_dist = d;
      split = i;
    }
  }
  if (split < 0 || max_dist <= epsilon) return;
  rdp_recurse(pts, first, split, epsilon, kept);
  kept.push_back(split);
  rdp_recurse(pts, split, last, epsilon, kept);
}

}  // namespace

std::vector<int> rdp_simplify(const std::vector<Eigen::Vector2d>& polyline, double epsilon) {
  const int n = static_cast<int>(polyline.size());
  if (n < 2) throw Error("rdp_simplify: need at least 2 points");
  if (!(epsilon > 0.0)) throw Error("rdp_simplify: epsilon must be positive");
  std::vector<int> kept;
  kept.push_back(0);
  rdp_recurse(polyline, 0, n - 1, epsilon, kept);
  kept.push_back(n - 1);
  std::sort(kept.begin(), kept.end());
  return kept;
}

TurnRanges extract_turn_ranges(const std::vector<Eigen::Vector2d>& gps_en,
                               double epsilon,
                               int half_window) {
  const int n = static_cast<int>(gps_en.size());
  if (n < 3) throw Error("extract_turn_ranges: need at least 3 fixes");
  const std::vector<int> kept = rdp_simplify(gps_en, epsilon);

  TurnRanges out;
  for (size_t i = 1; i + 1 < kept.size(); ++i) {
    const int center = kept[i];
    const int start = std::max(0, center - half_window);
    const int end = std::min(n - 1, center + half_window);
    if (!out.ranges.empty() && start <= out.ranges.back().second) {
      out.ranges.back().second = std::max(out.ranges.back().second, end);
    } else {
      out.ranges.emplace_back(start, end);
    }
  }
  return out;
}

}  // namespace signpos
