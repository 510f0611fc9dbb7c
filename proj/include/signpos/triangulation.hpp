#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "signpos/camera.hpp"
#include "signpos/sign_track.hpp"
#include "signpos/trajectory.hpp"

namespace signpos {

/// Observation ray: camera center and unit viewing direction in world frame.
struct Ray {
  Eigen::Vector3d origin;
  Eigen::Vector3d direction;  // unit norm
};

/// Closed-form point minimizing the sum of squared perpendicular distances to
/// all rays. Throws DegenerateRays when the 3x3 system is rank deficient
/// (smallest singular value below 1e-10 of the largest).
Eigen::Vector3d midpoint_triangulate(const std::vector<Ray>& rays);

struct BaOptions {
  int max_iterations = 100;
  double lambda_init = 1e-3;
  double cost_tolerance = 1e-10;     // relative cost decrease
  double gradient_tolerance = 1e-10; // infinity norm
};

struct BaResult {
  Eigen::Vector3d point;
  double initial_cost = 0.0;  // sum of squared pixel residuals
  double final_cost = 0.0;
  int iterations = 0;
  bool converged = true;
};

/// Pixel reprojection residual of a world point in one camera, and its
/// Jacobian with respect to the world point. valid is false when the point
/// is at or behind the camera plane; such terms enter the optimization with
/// a large constant residual and zero Jacobian.
struct ReprojectionEval {
  Eigen::Vector2d residual;
  Eigen::Matrix<double, 2, 3> jacobian;
  bool valid = false;
};

ReprojectionEval evaluate_reprojection(const PinholeIntrinsics& k, const Pose& world_from_camera,
                                       const Eigen::Vector3d& p_world, const Eigen::Vector2d& observed);

/// Levenberg-Marquardt refinement of a single sign point against fixed poses
/// by minimizing pixel reprojection error. The returned cost never exceeds
/// the initial cost. Throws BehindCameraInit when p_init has non-positive
/// depth in every observing frame.
BaResult bundle_adjust_sign(const Eigen::Vector3d& p_init, const SignTrack& track,
                            const std::map<int, Pose>& poses, const PinholeIntrinsics& k,
                            const BaOptions& opts = {});

/// Camera-frame coordinates of the absolute position in each listed frame.
std::map<int, Eigen::Vector3d> relative_positions(const Eigen::Vector3d& p_abs,
                                                  const std::map<int, Pose>& poses,
                                                  const std::vector<int>& frames);

struct TriangulationOptions {
  bool short_mode = false;  // re-align locally around the detection track
  int short_margin = 10;    // frames on each side of the track in short mode
  BaOptions ba;
};

/// Full Approach-A positioning of one track: align the provider trajectory to
/// the ENU anchors (globally, or over the short window), build rays from the
/// bbox centers, mid-point triangulate, refine with bundle adjustment, and
/// project back to per-frame relative positions. A negative relative depth in
/// any observing frame marks the sign TriangulationFailed. Tracks observed in
/// fewer than two posed frames come back Skipped.
SignPositionResult triangulate_track(const SignTrack& track, const Trajectory& provider_traj,
                                     const FrameAnchors& anchors, const PinholeIntrinsics& k,
                                     const TriangulationOptions& opts = {});

}  // namespace signpos
