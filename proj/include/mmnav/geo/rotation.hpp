#pragma once

#include <Eigen/Core>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/errors.hpp"

namespace mmnav {

/// Vehicle attitude: pitch and roll in radians, azimuth in radians measured
/// clockwise from north (east = sin, north = cos).
template <typename Scalar>
struct AttitudeT {
  Scalar pitch = Scalar(0);
  Scalar roll = Scalar(0);
  Scalar azimuth = Scalar(0);
};
using Attitude = AttitudeT<double>;

/// Unit quaternion with vector part first and scalar part last:
/// coeffs = [q1 q2 q3 q4].  Parameterizes the body-to-local rotation matrix
/// produced by rotation_from_quaternion().
template <typename Scalar>
struct QuaternionT {
  Eigen::Matrix<Scalar, 4, 1> coeffs{Scalar(0), Scalar(0), Scalar(0), Scalar(1)};

  Scalar q1() const { return coeffs(0); }
  Scalar q2() const { return coeffs(1); }
  Scalar q3() const { return coeffs(2); }
  Scalar q4() const { return coeffs(3); }
  Eigen::Matrix<Scalar, 3, 1> vec() const { return coeffs.template head<3>(); }
  Scalar norm() const { return coeffs.norm(); }

  static QuaternionT identity() { return QuaternionT{}; }
};
using Quaternion = QuaternionT<double>;

/// Cross-product matrix: skew(v) * w == v x w.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> skew(const Eigen::Matrix<Scalar, 3, 1>& v) {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << Scalar(0), -v(2), v(1),
       v(2), Scalar(0), -v(0),
       -v(1), v(0), Scalar(0);
  return m;
}

/// Body-to-local rotation matrix from pitch/roll/azimuth.
///
/// Body axes: x right, y forward, z up.  Local axes: east, north, up.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> rotation_from_attitude(const AttitudeT<Scalar>& att) {
  const Scalar sp = std::sin(att.pitch), cp = std::cos(att.pitch);
  const Scalar sr = std::sin(att.roll), cr = std::cos(att.roll);
  const Scalar sa = std::sin(att.azimuth), ca = std::cos(att.azimuth);
  Eigen::Matrix<Scalar, 3, 3> r;
  r << ca * cr + sa * sp * sr, sa * cp, ca * sr - sa * sp * cr,
       -sa * cr + ca * sp * sr, ca * cp, -sa * sr - ca * sp * cr,
       -cp * sr, sp, cp * cr;
  return r;
}

/// Pitch/roll/azimuth from a body-to-local rotation matrix, four-quadrant
/// arctangents throughout.  Azimuth is wrapped to [0, 2*pi).
///
/// Throws GimbalProximity when |cos(pitch)| < 1e-6.
template <typename Scalar>
AttitudeT<Scalar> attitude_from_rotation(const Eigen::Matrix<Scalar, 3, 3>& r) {
  const Scalar cp = std::sqrt(r(0, 1) * r(0, 1) + r(1, 1) * r(1, 1));
  if (cp < Scalar(1e-6)) {
    throw GimbalProximity("attitude_from_rotation: pitch within 1e-6 of +-pi/2");
  }
  AttitudeT<Scalar> att;
  att.pitch = std::atan2(r(2, 1), cp);
  att.roll = -std::atan2(r(2, 0), r(2, 2));
  att.azimuth = wrap_two_pi(std::atan2(r(0, 1), r(1, 1)));
  return att;
}

/// Rotation matrix from a unit quaternion.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> rotation_from_quaternion(const QuaternionT<Scalar>& q) {
  const Scalar q1 = q.q1(), q2 = q.q2(), q3 = q.q3(), q4 = q.q4();
  Eigen::Matrix<Scalar, 3, 3> r;
  r(0, 0) = q1 * q1 - q2 * q2 - q3 * q3 + q4 * q4;
  r(0, 1) = Scalar(2) * (q1 * q2 + q3 * q4);
  r(0, 2) = Scalar(2) * (q1 * q3 - q2 * q4);
  r(1, 0) = Scalar(2) * (q1 * q2 - q3 * q4);
  r(1, 1) = -q1 * q1 + q2 * q2 - q3 * q3 + q4 * q4;
  r(1, 2) = Scalar(2) * (q2 * q3 + q1 * q4);
  r(2, 0) = Scalar(2) * (q1 * q3 + q2 * q4);
  r(2, 1) = Scalar(2) * (q2 * q3 - q1 * q4);
  r(2, 2) = -q1 * q1 - q2 * q2 + q3 * q3 + q4 * q4;
  return r;
}

/// First-order norm restoration q * (1 + delta/2) followed by an exact
/// renormalization.  Throws ZeroQuaternion for |q| < 1e-12.
template <typename Scalar>
QuaternionT<Scalar> normalize_quaternion(const QuaternionT<Scalar>& q) {
  const Scalar n2 = q.coeffs.squaredNorm();
  if (n2 < Scalar(1e-24)) {
    throw ZeroQuaternion("normalize_quaternion: zero-norm quaternion");
  }
  const Scalar delta = Scalar(1) - n2;
  QuaternionT<Scalar> out;
  out.coeffs = q.coeffs * (Scalar(1) + delta / Scalar(2));
  out.coeffs /= out.coeffs.norm();
  return out;
}

/// Unit quaternion extracted from a body-to-local rotation matrix.
///
/// Primary branch divides by the scalar part; near 180-degree rotations
/// (1 + trace < 1e-6) the largest-diagonal-element branch is used instead.
template <typename Scalar>
QuaternionT<Scalar> quaternion_from_rotation(const Eigen::Matrix<Scalar, 3, 3>& r) {
  QuaternionT<Scalar> q;
  const Scalar trace_term = Scalar(1) + r(0, 0) + r(1, 1) + r(2, 2);
  if (trace_term >= Scalar(1e-6)) {
    const Scalar q4 = Scalar(0.5) * std::sqrt(trace_term);
    q.coeffs << Scalar(0.25) * (r(1, 2) - r(2, 1)) / q4,
                Scalar(0.25) * (r(2, 0) - r(0, 2)) / q4,
                Scalar(0.25) * (r(0, 1) - r(1, 0)) / q4,
                q4;
    return normalize_quaternion(q);
  }
  // Largest diagonal element selects the numerically dominant vector
  // component.
  int k = 0;
  if (r(1, 1) > r(0, 0)) k = 1;
  if (r(2, 2) > r(k, k)) k = 2;
  Scalar s2;
  switch (k) {
    case 0:
      s2 = Scalar(1) + r(0, 0) - r(1, 1) - r(2, 2);
      if (s2 <= Scalar(0)) throw DegenerateRotation("quaternion_from_rotation: invalid matrix");
      {
        const Scalar s = Scalar(2) * std::sqrt(s2);
        q.coeffs << Scalar(0.25) * s,
                    (r(0, 1) + r(1, 0)) / s,
                    (r(0, 2) + r(2, 0)) / s,
                    (r(1, 2) - r(2, 1)) / s;
      }
      break;
    case 1:
      s2 = Scalar(1) + r(1, 1) - r(0, 0) - r(2, 2);
      if (s2 <= Scalar(0)) throw DegenerateRotation("quaternion_from_rotation: invalid matrix");
      {
        const Scalar s = Scalar(2) * std::sqrt(s2);
        q.coeffs << (r(0, 1) + r(1, 0)) / s,
                    Scalar(0.25) * s,
                    (r(1, 2) + r(2, 1)) / s,
                    (r(2, 0) - r(0, 2)) / s;
      }
      break;
    default:
      s2 = Scalar(1) + r(2, 2) - r(0, 0) - r(1, 1);
      if (s2 <= Scalar(0)) throw DegenerateRotation("quaternion_from_rotation: invalid matrix");
      {
        const Scalar s = Scalar(2) * std::sqrt(s2);
        q.coeffs << (r(0, 2) + r(2, 0)) / s,
                    (r(1, 2) + r(2, 1)) / s,
                    Scalar(0.25) * s,
                    (r(0, 1) - r(1, 0)) / s;
      }
      break;
  }
  return normalize_quaternion(q);
}

/// 4x4 skew form of the body rotation rate, consistent with the quaternion
/// convention above: q_dot = 0.5 * body_rate_matrix(omega) * q.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> body_rate_matrix(const Eigen::Matrix<Scalar, 3, 1>& w) {
  Eigen::Matrix<Scalar, 4, 4> m;
  m << Scalar(0), w(2), -w(1), -w(0),
       -w(2), Scalar(0), w(0), -w(1),
       w(1), -w(0), Scalar(0), -w(2),
       w(0), w(1), w(2), Scalar(0);
  return m;
}

/// One first-order quaternion integration step
/// q_next = q + 0.5 * Omega(omega_lb_b) * q * dt, renormalized.
template <typename Scalar>
QuaternionT<Scalar> propagate_quaternion(const QuaternionT<Scalar>& q,
                                         const Eigen::Matrix<Scalar, 3, 1>& omega_lb_b,
                                         Scalar dt) {
  QuaternionT<Scalar> out;
  out.coeffs = q.coeffs + Scalar(0.5) * (body_rate_matrix(omega_lb_b) * q.coeffs) * dt;
  return normalize_quaternion(out);
}

/// Quaternion corresponding to an attitude (via the rotation matrix).
template <typename Scalar>
QuaternionT<Scalar> quaternion_from_attitude(const AttitudeT<Scalar>& att) {
  return quaternion_from_rotation(rotation_from_attitude(att));
}

}  // namespace mmnav
