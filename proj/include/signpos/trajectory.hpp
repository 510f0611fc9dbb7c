#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <limits>
#include <utility>
#include <vector>

#include "signpos/errors.hpp"

namespace signpos {

/// Rigid transform, world-from-camera convention: x_world = R * x_cam + t.
/// The translation is the camera center in world coordinates.
struct Pose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p_cam) const { return rotation * p_cam + translation; }

  /// Camera-from-world: x_cam = R^T * (x_world - t).
  Eigen::Vector3d apply_inverse(const Eigen::Vector3d& p_world) const {
    return rotation.conjugate() * (p_world - translation);
  }

  Pose inverse() const {
    const Eigen::Quaterniond qi = rotation.conjugate();
    return {qi, qi * (-translation)};
  }

  /// this ∘ other: first other, then this.
  Pose compose(const Pose& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = rotation.toRotationMatrix();
    m.topRightCorner<3, 1>() = translation;
    return m;
  }
};

struct TimedPose {
  int frame_id = 0;
  Pose pose;
};

/// Ordered pose sequence with strictly increasing frame ids.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::vector<TimedPose> poses);

  const std::vector<TimedPose>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  bool has(int frame_id) const;
  const Pose& at(int frame_id) const;

  bool covers(const std::vector<int>& frames) const;

  std::vector<std::pair<int, Eigen::Vector3d>> centers() const;

 private:
  std::vector<TimedPose> entries_;
};

/// s * R * x + t similarity, s > 0.
struct SimilarityTransform {
  double scale = 1.0;
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return scale * (rotation * p) + translation; }
};

/// Per-frame metric anchor points (e.g. GPS fixes in ENU), sorted by frame id.
using FrameAnchors = std::vector<std::pair<int, Eigen::Vector3d>>;

/// Composes adjacent relative poses into a trajectory anchored at identity.
/// rel_poses[j] maps camera frame j+1 into camera frame j.
Trajectory concat_relative_poses(const std::vector<Pose>& rel_poses);

/// Least-squares similarity src -> dst (Umeyama). Needs >= 3 point pairs with
/// a source covariance of rank >= 2; otherwise throws DegenerateConfiguration.
SimilarityTransform umeyama_align(const std::vector<Eigen::Vector3d>& src,
                                  const std::vector<Eigen::Vector3d>& dst);

/// Transforms camera centers by the similarity and left-composes rotations
/// with its rotation, so projections stay consistent after alignment.
Trajectory apply_similarity(const Trajectory& traj, const SimilarityTransform& t);

/// Umeyama alignment of the trajectory's camera centers onto the anchors,
/// restricted to common frames within [frame_min, frame_max].
SimilarityTransform align_to_anchors(const Trajectory& traj, const FrameAnchors& anchors,
                                     int frame_min = std::numeric_limits<int>::min(),
                                     int frame_max = std::numeric_limits<int>::max());

/// Absolute trajectory error: rigid (no-scale) closed-form alignment of the
/// estimated centers onto ground truth, then RMSE over common frames.
double ate_full(const Trajectory& est, const Trajectory& gt);

/// Windowed ATE: every 5-frame window (stride 1) is similarity-aligned with
/// scale; returns mean and population standard deviation of window RMSEs.
std::pair<double, double> ate_5(const Trajectory& est, const Trajectory& gt);

}  // namespace signpos
