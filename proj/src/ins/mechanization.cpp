#include "mmnav/ins/mechanization.hpp"

#include <cmath>

#include "mmnav/errors.hpp"

namespace mmnav {

Eigen::Vector3d body_to_local(const Eigen::Vector3d& vec_b, const Attitude& att) {
  return rotation_from_attitude(att) * vec_b;
}

Eigen::Vector3d transport_rate(const Eigen::Vector3d& v, double latitude, double altitude,
                               const EarthModel& earth) {
  if (std::abs(latitude) > M_PI / 2.0 - 1e-6) {
    throw LatitudeSingularity("transport_rate: latitude too close to a pole");
  }
  const auto radii = curvature_radii(latitude, earth);
  return {-v(1) / (radii.r_m + altitude),
          v(0) / (radii.r_n + altitude),
          v(0) * std::tan(latitude) / (radii.r_n + altitude)};
}

Eigen::Vector3d odometer_velocity_l(double speed, const Attitude& att) {
  const double sp = std::sin(att.pitch), cp = std::cos(att.pitch);
  const double sa = std::sin(att.azimuth), ca = std::cos(att.azimuth);
  return Eigen::Vector3d(sa * cp, ca * cp, sp) * speed;
}

namespace mech_detail {

Quaternion attitude_step(const NavState& state, const Eigen::Vector3d& omega_ib_b,
                         double dt, const EarthModel& earth) {
  const Eigen::Matrix3d r_b_l = rotation_from_quaternion(state.quaternion);
  const Eigen::Vector3d omega_il_l =
      earth_rate_l(state.position.latitude, earth) +
      transport_rate(state.velocity_enu, state.position.latitude,
                     state.position.altitude, earth);
  const Eigen::Vector3d omega_lb_b = omega_ib_b - r_b_l.transpose() * omega_il_l;
  return propagate_quaternion(state.quaternion, omega_lb_b, dt);
}

Eigen::Vector3d velocity_step(const NavState& state, const Quaternion& q_next,
                              const Eigen::Vector3d& f_b, double dt,
                              const EarthModel& earth) {
  const double lat = state.position.latitude;
  const double h = state.position.altitude;
  const Eigen::Matrix3d r_old = rotation_from_quaternion(state.quaternion);
  const Eigen::Matrix3d r_new = rotation_from_quaternion(q_next);

  const Eigen::Vector3d f_l = 0.5 * (r_old + r_new) * f_b;
  const Eigen::Vector3d coriolis =
      (2.0 * skew<double>(earth_rate_l(lat, earth)) +
       skew<double>(transport_rate(state.velocity_enu, lat, h, earth))) *
      state.velocity_enu;
  const Eigen::Vector3d g_l(0.0, 0.0, -normal_gravity(lat, h));

  return state.velocity_enu + dt * (f_l - coriolis + g_l);
}

GeodeticPosition position_step(const NavState& state, const Eigen::Vector3d& v_next,
                               double dt, const EarthModel& earth) {
  const auto radii = curvature_radii(state.position.latitude, earth);
  const Eigen::Vector3d v_mid = 0.5 * (state.velocity_enu + v_next);
  GeodeticPosition p = state.position;
  p.latitude += dt * v_mid(1) / (radii.r_m + state.position.altitude);
  p.longitude = wrap_pi(p.longitude +
                        dt * v_mid(0) / ((radii.r_n + state.position.altitude) *
                                         std::cos(state.position.latitude)));
  p.altitude += dt * v_mid(2);
  return p;
}

}  // namespace mech_detail

NavState mechanize_step(const NavState& state, const ImuSample& imu, double dt,
                        const EarthModel& earth) {
  NavState next;
  next.quaternion = mech_detail::attitude_step(state, imu.angular_rate, dt, earth);
  next.velocity_enu = mech_detail::velocity_step(state, next.quaternion,
                                                 imu.specific_force, dt, earth);
  next.position = mech_detail::position_step(state, next.velocity_enu, dt, earth);
  next.sync_from_quaternion();
  return next;
}

}  // namespace mmnav
