#pragma once

#include <Eigen/Core>

#include "mmnav/geo/earth.hpp"
#include "mmnav/ins/types.hpp"

namespace mmnav {

/// Rotate a body-frame vector into the local-level frame.
Eigen::Vector3d body_to_local(const Eigen::Vector3d& vec_b, const Attitude& att);

/// Transport rate omega_el^l = [-v_n/(r_m+h), v_e/(r_n+h), v_e tan(phi)/(r_n+h)].
///
/// Throws LatitudeSingularity within 1e-6 rad of the poles.
Eigen::Vector3d transport_rate(const Eigen::Vector3d& velocity_enu, double latitude,
                               double altitude, const EarthModel& earth);

/// Odometer forward speed resolved in the local-level frame:
/// v_odo * (sin A cos p, cos A cos p, sin p) -- the second column of the
/// body-to-local matrix.
Eigen::Vector3d odometer_velocity_l(double speed, const Attitude& att);

/// One strapdown integration step over dt.
///
/// Order: attitude (first-order quaternion step with
/// omega_lb^b = omega_ib^b - R_l^b (omega_ie^l + omega_el^l)), then velocity
/// (trapezoidal resolution of the specific force through the old and new
/// attitude, Coriolis and gravity from the start-of-step state), then
/// position (trapezoidal on velocity, curvature radii at the start-of-step
/// latitude).
NavState mechanize_step(const NavState& state, const ImuSample& imu, double dt,
                        const EarthModel& earth);

/// The three sub-steps of mechanize_step, exposed so the trajectory
/// generator can invert them exactly.
namespace mech_detail {

Quaternion attitude_step(const NavState& state, const Eigen::Vector3d& omega_ib_b,
                         double dt, const EarthModel& earth);

Eigen::Vector3d velocity_step(const NavState& state, const Quaternion& q_next,
                              const Eigen::Vector3d& f_b, double dt,
                              const EarthModel& earth);

GeodeticPosition position_step(const NavState& state, const Eigen::Vector3d& v_next,
                               double dt, const EarthModel& earth);

}  // namespace mech_detail

}  // namespace mmnav
