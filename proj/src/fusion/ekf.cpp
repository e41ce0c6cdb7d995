#include "mmnav/fusion/ekf.hpp"

#include <cmath>

#include "mmnav/constants.hpp"

namespace mmnav {

namespace {

StateVector wrapped_difference(const StateVector& a, const StateVector& b) {
  StateVector d = a - b;
  for (int k = 0; k < kStateDim; ++k) {
    if (kAngleRow[k]) d(k) = wrap_pi(d(k));
  }
  return d;
}

}  // namespace

std::pair<StateMatrix, Eigen::Matrix<double, 9, 6>> ekf_jacobians(
    const FilterState& state, const ImuSample& imu, double dt,
    const TransitionFn& transition, double step_scale) {
  const StateVector x0 = pack_state(state.nav);

  StateMatrix f_jac;
  for (int j = 0; j < kStateDim; ++j) {
    const double h = step_scale * std::max(1.0, std::abs(x0(j)));
    StateVector xp = x0, xm = x0;
    xp(j) += h;
    xm(j) -= h;
    const StateVector yp = pack_state(transition(unpack_state(xp), imu, dt));
    const StateVector ym = pack_state(transition(unpack_state(xm), imu, dt));
    f_jac.col(j) = wrapped_difference(yp, ym) / (2.0 * h);
  }

  const InputVector u0 =
      (InputVector() << imu.specific_force, imu.angular_rate).finished();
  Eigen::Matrix<double, 9, 6> g_jac;
  for (int j = 0; j < kInputDim; ++j) {
    const double h = step_scale * std::max(1.0, std::abs(u0(j)));
    ImuSample up = imu, um = imu;
    InputVector uv = u0;
    uv(j) += h;
    up.specific_force = uv.head<3>();
    up.angular_rate = uv.tail<3>();
    uv(j) -= 2.0 * h;
    um.specific_force = uv.head<3>();
    um.angular_rate = uv.tail<3>();
    const StateVector yp = pack_state(transition(state.nav, up, dt));
    const StateVector ym = pack_state(transition(state.nav, um, dt));
    g_jac.col(j) = wrapped_difference(yp, ym) / (2.0 * h);
  }
  return {f_jac, g_jac};
}

FilterState ekf_predict(const FilterState& state, const ImuSample& imu,
                        const ProcessNoise& q, double dt, const TransitionFn& transition,
                        double step_scale) {
  const auto [f_jac, g_jac] = ekf_jacobians(state, imu, dt, transition, step_scale);

  FilterState next;
  next.nav = transition(state.nav, imu, dt);
  StateMatrix p = f_jac * state.covariance * f_jac.transpose() +
                  g_jac * q.as_input_diag().asDiagonal() * g_jac.transpose();
  next.covariance = 0.5 * (p + p.transpose());
  next.epoch = state.epoch + dt;
  return next;
}

}  // namespace mmnav
