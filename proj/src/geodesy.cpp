#include "signpos/geodesy.hpp"

#include <cmath>

namespace signpos {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
constexpr double kRadToDeg = 180.0 / M_PI;
}  // namespace

bool GeodeticCoord::valid() const {
  return std::isfinite(lat_deg) && std::isfinite(lon_deg) && std::isfinite(alt_m) &&
         lat_deg >= -90.0 && lat_deg <= 90.0 && lon_deg > -180.0 && lon_deg <= 180.0;
}

Eigen::Vector3d geodetic_to_ecef(const GeodeticCoord& g) {
  const double lat = g.lat_deg * kDegToRad;
  const double lon = g.lon_deg * kDegToRad;
  const double sin_lat = std::sin(lat);
  const double cos_lat = std::cos(lat);
  // prime vertical radius of curvature
  const double n = wgs84::kSemiMajorAxis / std::sqrt(1.0 - wgs84::kEccentricitySq * sin_lat * sin_lat);
  return {(n + g.alt_m) * cos_lat * std::cos(lon),
          (n + g.alt_m) * cos_lat * std::sin(lon),
          (n * (1.0 - wgs84::kEccentricitySq) + g.alt_m) * sin_lat};
}

GeodeticCoord ecef_to_geodetic(const Eigen::Vector3d& ecef) {
  const double x = ecef.x();
  const double y = ecef.y();
  const double z = ecef.z();
  const double p = std::hypot(x, y);

  GeodeticCoord g;
  g.lon_deg = (p > 0.0) ? std::atan2(y, x) * kRadToDeg : 0.0;
  if (g.lon_deg <= -180.0) g.lon_deg += 360.0;

  if (p < 1e-9) {
    // on the polar axis
    g.lat_deg = (z >= 0.0) ? 90.0 : -90.0;
    g.alt_m = std::abs(z) - wgs84::kSemiMinorAxis;
    return g;
  }

  // fixed-point iteration on latitude; quadratic in practice and converges to
  // machine precision in a handful of steps for |alt| < 1e5 m
  double lat = std::atan2(z, p * (1.0 - wgs84::kEccentricitySq));
  double alt = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double sin_lat = std::sin(lat);
    const double n = wgs84::kSemiMajorAxis / std::sqrt(1.0 - wgs84::kEccentricitySq * sin_lat * sin_lat);
    alt = p / std::cos(lat) - n;
    const double lat_next = std::atan2(z, p * (1.0 - wgs84::kEccentricitySq * n / (n + alt)));
    const double delta = std::abs(lat_next - lat);
    lat = lat_next;
    if (delta < 1e-15) break;
  }
  g.lat_deg = lat * kRadToDeg;
  g.alt_m = alt;
  return g;
}

Eigen::Matrix3d enu_rotation(const GeodeticCoord& origin) {
  const double lat = origin.lat_deg * kDegToRad;
  const double lon = origin.lon_deg * kDegToRad;
  const double sl = std::sin(lat), cl = std::cos(lat);
  const double so = std::sin(lon), co = std::cos(lon);
  Eigen::Matrix3d r;
  r <<       -so,        co,  0.0,   // east
       -sl * co,  -sl * so,   cl,    // north
        cl * co,   cl * so,   sl;    // up
  return r;
}

EnuCoord geodetic_to_enu(const GeodeticCoord& g, const GeodeticCoord& origin) {
  const Eigen::Vector3d d = geodetic_to_ecef(g) - geodetic_to_ecef(origin);
  return EnuCoord::from_vec(enu_rotation(origin) * d);
}

GeodeticCoord enu_to_geodetic(const EnuCoord& e, const GeodeticCoord& origin) {
  const Eigen::Vector3d ecef =
      geodetic_to_ecef(origin) + enu_rotation(origin).transpose() * e.vec();
  return ecef_to_geodetic(ecef);
}

}  // namespace signpos
