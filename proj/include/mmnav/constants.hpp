#pragma once

#include <cmath>

namespace mmnav {

inline constexpr double kSpeedOfLight = 299792458.0;  // [m/s]

/// Wrap an angle to (-pi, pi].
template <typename Scalar>
Scalar wrap_pi(Scalar angle) {
  const Scalar two_pi = Scalar(2) * Scalar(M_PI);
  Scalar a = std::fmod(angle, two_pi);
  if (a <= -Scalar(M_PI)) a += two_pi;
  if (a > Scalar(M_PI)) a -= two_pi;
  return a;
}

/// Wrap an angle to [0, 2*pi).
template <typename Scalar>
Scalar wrap_two_pi(Scalar angle) {
  const Scalar two_pi = Scalar(2) * Scalar(M_PI);
  Scalar a = std::fmod(angle, two_pi);
  if (a < Scalar(0)) a += two_pi;
  if (a >= two_pi) a -= two_pi;
  return a;
}

template <typename Scalar>
Scalar deg_to_rad(Scalar deg) {
  return deg * Scalar(M_PI) / Scalar(180);
}

template <typename Scalar>
Scalar rad_to_deg(Scalar rad) {
  return rad * Scalar(180) / Scalar(M_PI);
}

}  // namespace mmnav
