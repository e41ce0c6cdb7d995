#pragma once

#include <Eigen/Core>
#include <cmath>

namespace mmnav {

/// WGS84 reference ellipsoid parameters.
///
/// Gravity is evaluated through normal_gravity() (Somigliana-based series
/// with altitude correction) rather than stored as a single constant.
struct EarthModel {
  double semi_major_axis = 6378137.0;        ///< a [m]
  double eccentricity_sq = 6.69437999014e-3; ///< first eccentricity squared
  double rotation_rate = 7.292115e-5;        ///< omega_e [rad/s]
};

/// Prime-vertical (r_n) and meridian (r_m) radii of curvature [m].
template <typename Scalar>
struct CurvatureRadii {
  Scalar r_n;
  Scalar r_m;
};

/// r_n = a / sqrt(1 - e^2 sin^2(phi)),  r_m = a (1 - e^2) / (1 - e^2 sin^2(phi))^(3/2)
template <typename Scalar>
CurvatureRadii<Scalar> curvature_radii(Scalar latitude, const EarthModel& earth) {
  const Scalar a = Scalar(earth.semi_major_axis);
  const Scalar e2 = Scalar(earth.eccentricity_sq);
  const Scalar s = std::sin(latitude);
  const Scalar w2 = Scalar(1) - e2 * s * s;
  const Scalar w = std::sqrt(w2);
  return {a / w, a * (Scalar(1) - e2) / (w2 * w)};
}

/// Normal gravity magnitude [m/s^2] at geodetic latitude [rad] and
/// ellipsoidal height [m] (WGS84 series, positive down-the-plumbline).
template <typename Scalar>
Scalar normal_gravity(Scalar latitude, Scalar altitude) {
  const Scalar s2 = std::sin(latitude) * std::sin(latitude);
  const Scalar s4 = s2 * s2;
  return Scalar(9.7803267714) * (Scalar(1) + Scalar(0.0052790414) * s2 +
                                 Scalar(0.0000232718) * s4) +
         (Scalar(-3.087691089e-6) + Scalar(4.397731e-9) * s2) * altitude +
         Scalar(7.21e-13) * altitude * altitude;
}

/// Earth rotation rate resolved in the local-level ENU frame:
/// [0, omega_e cos(phi), omega_e sin(phi)].
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> earth_rate_l(Scalar latitude, const EarthModel& earth) {
  const Scalar w = Scalar(earth.rotation_rate);
  return {Scalar(0), w * std::cos(latitude), w * std::sin(latitude)};
}

}  // namespace mmnav
