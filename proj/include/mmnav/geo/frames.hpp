#pragma once

#include <Eigen/Core>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/geo/earth.hpp"

namespace mmnav {

/// Geodetic position: latitude/longitude in radians, altitude in meters
/// above the ellipsoid.  Longitude is kept wrapped to (-pi, pi].
template <typename Scalar>
struct GeodeticPositionT {
  Scalar latitude = Scalar(0);
  Scalar longitude = Scalar(0);
  Scalar altitude = Scalar(0);

  static GeodeticPositionT from_degrees(Scalar lat_deg, Scalar lon_deg, Scalar alt_m) {
    return {deg_to_rad(lat_deg), deg_to_rad(lon_deg), alt_m};
  }
};
using GeodeticPosition = GeodeticPositionT<double>;

/// Curvilinear geodetic -> local ENU offset [m] about `origin`.
///
/// All scale factors (curvature radii, cos latitude) are evaluated at the
/// origin so the mapping is exactly invertible; valid for offsets well
/// below the curvature scale (< ~50 km).
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> geodetic_to_enu(const GeodeticPositionT<Scalar>& p,
                                            const GeodeticPositionT<Scalar>& origin,
                                            const EarthModel& earth) {
  const auto radii = curvature_radii(origin.latitude, earth);
  const Scalar east = wrap_pi(p.longitude - origin.longitude) *
                      (radii.r_n + origin.altitude) * std::cos(origin.latitude);
  const Scalar north = (p.latitude - origin.latitude) * (radii.r_m + origin.altitude);
  const Scalar up = p.altitude - origin.altitude;
  return {east, north, up};
}

/// Inverse of geodetic_to_enu about the same origin.
template <typename Scalar>
GeodeticPositionT<Scalar> enu_to_geodetic(const Eigen::Matrix<Scalar, 3, 1>& enu,
                                          const GeodeticPositionT<Scalar>& origin,
                                          const EarthModel& earth) {
  const auto radii = curvature_radii(origin.latitude, earth);
  GeodeticPositionT<Scalar> p;
  p.latitude = origin.latitude + enu(1) / (radii.r_m + origin.altitude);
  p.longitude = wrap_pi(origin.longitude +
                        enu(0) / ((radii.r_n + origin.altitude) * std::cos(origin.latitude)));
  p.altitude = origin.altitude + enu(2);
  return p;
}

}  // namespace mmnav
