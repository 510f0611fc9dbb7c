#pragma once

#include <Eigen/Core>

#include "signpos/errors.hpp"

namespace signpos {

// WGS84 ellipsoid constants.
namespace wgs84 {
inline constexpr double kSemiMajorAxis = 6378137.0;
inline constexpr double kFlattening = 1.0 / 298.257223563;
inline constexpr double kEccentricitySq = kFlattening * (2.0 - kFlattening);
inline constexpr double kSemiMinorAxis = kSemiMajorAxis * (1.0 - kFlattening);
}  // namespace wgs84

/// Geodetic position on the WGS84 ellipsoid. Altitudes are ellipsoidal.
struct GeodeticCoord {
  double lat_deg = 0.0;  // [-90, 90]
  double lon_deg = 0.0;  // (-180, 180]
  double alt_m = 0.0;

  bool valid() const;
};

/// Local East-North-Up coordinates; only meaningful together with the
/// GeodeticCoord origin they were computed against.
struct EnuCoord {
  double east = 0.0;
  double north = 0.0;
  double up = 0.0;

  Eigen::Vector3d vec() const { return {east, north, up}; }
  static EnuCoord from_vec(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
};

/// Closed-form WGS84 geodetic -> Earth-centered Earth-fixed transform.
Eigen::Vector3d geodetic_to_ecef(const GeodeticCoord& g);

/// Iterative ECEF -> geodetic inverse; converges well below 1e-9 m.
GeodeticCoord ecef_to_geodetic(const Eigen::Vector3d& ecef);

/// Rotation taking ECEF deltas into the East-North-Up tangent frame at origin.
Eigen::Matrix3d enu_rotation(const GeodeticCoord& origin);

EnuCoord geodetic_to_enu(const GeodeticCoord& g, const GeodeticCoord& origin);
GeodeticCoord enu_to_geodetic(const EnuCoord& e, const GeodeticCoord& origin);

}  // namespace signpos
