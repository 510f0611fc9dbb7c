#include "signpos/trajectory.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace signpos {

Trajectory::Trajectory(std::vector<TimedPose> poses) : entries_(std::move(poses)) {
  if (entries_.empty()) throw Error("Trajectory: empty pose list");
  for (size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i].frame_id >= entries_[i + 1].frame_id)
      throw Error("Trajectory: frame ids must be strictly increasing");
  }
  for (auto& e : entries_) {
    const double norm = e.pose.rotation.norm();
    if (std::abs(norm - 1.0) > 1e-9) e.pose.rotation.normalize();
  }
}

bool Trajectory::has(int frame_id) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), frame_id,
                                   [](const TimedPose& tp, int f) { return tp.frame_id < f; });
  return it != entries_.end() && it->frame_id == frame_id;
}

const Pose& Trajectory::at(int frame_id) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), frame_id,
                                   [](const TimedPose& tp, int f) { return tp.frame_id < f; });
  if (it == entries_.end() || it->frame_id != frame_id)
    throw Error("Trajectory: no pose for frame " + std::to_string(frame_id));
  return it->pose;
}

bool Trajectory::covers(const std::vector<int>& frames) const {
  for (int f : frames)
    if (!has(f)) return false;
  return true;
}

std::vector<std::pair<int, Eigen::Vector3d>> Trajectory::centers() const {
  std::vector<std::pair<int, Eigen::Vector3d>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(e.frame_id, e.pose.translation);
  return out;
}

Trajectory concat_relative_poses(const std::vector<Pose>& rel_poses) {
  if (rel_poses.empty()) throw Error("concat_relative_poses: empty input");
  std::vector<TimedPose> out;
  out.reserve(rel_poses.size() + 1);
  out.push_back({0, Pose::identity()});
  for (size_t j = 0; j < rel_poses.size(); ++j) {
    Pose next = out.back().pose.compose(rel_poses[j]);
    next.rotation.normalize();
    out.push_back({static_cast<int>(j) + 1, next});
  }
  return Trajectory(std::move(out));
}

SimilarityTransform umeyama_align(const std::vector<Eigen::Vector3d>& src,
                                  const std::vector<Eigen::Vector3d>& dst) {
  if (src.size() != dst.size()) throw Error("umeyama_align: size mismatch");
  const size_t n = src.size();
  if (n < 3) throw DegenerateConfiguration("umeyama_align: need at least 3 point pairs");

  Eigen::Vector3d mu_src = Eigen::Vector3d::Zero();
  Eigen::Vector3d mu_dst = Eigen::Vector3d::Zero();
  for (size_t i = 0; i < n; ++i) {
    mu_src += src[i];
    mu_dst += dst[i];
  }
  mu_src /= static_cast<double>(n);
  mu_dst /= static_cast<double>(n);

  double var_src = 0.0;
  Eigen::Matrix3d sigma = Eigen::Matrix3d::Zero();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector3d a = src[i] - mu_src;
    const Eigen::Vector3d b = dst[i] - mu_dst;
    var_src += a.squaredNorm();
    sigma += b * a.transpose();
  }
  var_src /= static_cast<double>(n);
  sigma /= static_cast<double>(n);

  if (var_src <= 0.0) throw DegenerateConfiguration("umeyama_align: coincident source points");

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d d = svd.singularValues();
  if (!(d(0) > 0.0) || d(1) <= 1e-10 * d(0))
    throw DegenerateConfiguration("umeyama_align: point configuration is collinear (covariance rank < 2)");

  Eigen::Vector3d s_diag = Eigen::Vector3d::Ones();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) s_diag(2) = -1.0;

  const Eigen::Matrix3d r = svd.matrixU() * s_diag.asDiagonal() * svd.matrixV().transpose();
  const double scale = d.dot(s_diag) / var_src;
  if (!(scale > 0.0)) throw DegenerateConfiguration("umeyama_align: non-positive scale");

  SimilarityTransform t;
  t.scale = scale;
  t.rotation = Eigen::Quaterniond(r).normalized();
  t.translation = mu_dst - scale * (r * mu_src);
  return t;
}

Trajectory apply_similarity(const Trajectory& traj, const SimilarityTransform& t) {
  std::vector<TimedPose> out;
  out.reserve(traj.size());
  for (const auto& e : traj.entries()) {
    Pose p;
    p.rotation = (t.rotation * e.pose.rotation).normalized();
    p.translation = t.apply(e.pose.translation);
    out.push_back({e.frame_id, p});
  }
  return Trajectory(std::move(out));
}

SimilarityTransform align_to_anchors(const Trajectory& traj, const FrameAnchors& anchors,
                                     int frame_min, int frame_max) {
  std::vector<Eigen::Vector3d> src, dst;
  for (const auto& [frame, enu] : anchors) {
    if (frame < frame_min || frame > frame_max || !traj.has(frame)) continue;
    src.push_back(traj.at(frame).translation);
    dst.push_back(enu);
  }
  if (src.size() < 3)
    throw InsufficientOverlap("align_to_anchors: only " + std::to_string(src.size()) +
                              " anchored frames in window");
  return umeyama_align(src, dst);
}

namespace {

std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> common_centers(const Trajectory& est,
                                                                        const Trajectory& gt) {
  std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> out;
  for (const auto& e : est.entries())
    if (gt.has(e.frame_id)) out.emplace_back(e.pose.translation, gt.at(e.frame_id).translation);
  return out;
}

// Closed-form rigid alignment (rotation + translation, unit scale) of src
// onto dst, returning the RMSE of the aligned residuals.
double rigid_rmse(const std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>>& pairs) {
  const size_t n = pairs.size();
  Eigen::Vector3d mu_src = Eigen::Vector3d::Zero(), mu_dst = Eigen::Vector3d::Zero();
  for (const auto& [s, d] : pairs) {
    mu_src += s;
    mu_dst += d;
  }
  mu_src /= static_cast<double>(n);
  mu_dst /= static_cast<double>(n);

  Eigen::Matrix3d sigma = Eigen::Matrix3d::Zero();
  for (const auto& [s, d] : pairs) sigma += (d - mu_dst) * (s - mu_src).transpose();

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d s_diag = Eigen::Vector3d::Ones();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) s_diag(2) = -1.0;
  const Eigen::Matrix3d r = svd.matrixU() * s_diag.asDiagonal() * svd.matrixV().transpose();

  double sse = 0.0;
  for (const auto& [s, d] : pairs) sse += (r * (s - mu_src) + mu_dst - d).squaredNorm();
  return std::sqrt(sse / static_cast<double>(n));
}

double similarity_rmse(const std::vector<Eigen::Vector3d>& src, const std::vector<Eigen::Vector3d>& dst) {
  const SimilarityTransform t = umeyama_align(src, dst);
  double sse = 0.0;
  for (size_t i = 0; i < src.size(); ++i) sse += (t.apply(src[i]) - dst[i]).squaredNorm();
  return std::sqrt(sse / static_cast<double>(src.size()));
}

}  // namespace

double ate_full(const Trajectory& est, const Trajectory& gt) {
  const auto pairs = common_centers(est, gt);
  if (pairs.size() < 3)
    throw InsufficientOverlap("ate_full: need at least 3 common frames, got " + std::to_string(pairs.size()));
  return rigid_rmse(pairs);
}

std::pair<double, double> ate_5(const Trajectory& est, const Trajectory& gt) {
  constexpr size_t kWindow = 5;
  const auto pairs = common_centers(est, gt);
  if (pairs.size() < kWindow)
    throw InsufficientOverlap("ate_5: need at least 5 common frames, got " + std::to_string(pairs.size()));

  std::vector<double> rmses;
  for (size_t start = 0; start + kWindow <= pairs.size(); ++start) {
    std::vector<Eigen::Vector3d> src, dst;
    src.reserve(kWindow);
    dst.reserve(kWindow);
    for (size_t i = start; i < start + kWindow; ++i) {
      src.push_back(pairs[i].first);
      dst.push_back(pairs[i].second);
    }
    rmses.push_back(similarity_rmse(src, dst));
  }

  double mean = 0.0;
  for (double r : rmses) mean += r;
  mean /= static_cast<double>(rmses.size());
  double var = 0.0;
  for (double r : rmses) var += (r - mean) * (r - mean);
  var /= static_cast<double>(rmses.size());
  return {mean, std::sqrt(var)};
}

}  // namespace signpos
