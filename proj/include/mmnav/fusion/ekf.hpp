#pragma once

#include <utility>

#include "mmnav/fusion/types.hpp"

namespace mmnav {

/// Central-difference Jacobians of the transition with respect to the state
/// (9x9) and the inputs (9x6).  Step size is `step_scale * max(1, |x_i|)`
/// per dimension.
std::pair<StateMatrix, Eigen::Matrix<double, 9, 6>> ekf_jacobians(
    const FilterState& state, const ImuSample& imu, double dt,
    const TransitionFn& transition, double step_scale = 1e-6);

/// Extended Kalman prediction: mean through the full transition, covariance
/// through finite-difference Jacobians, P' = F P F' + G Q G'.
FilterState ekf_predict(const FilterState& state, const ImuSample& imu,
                        const ProcessNoise& q, double dt, const TransitionFn& transition,
                        double step_scale = 1e-6);

// The EKF measurement update coincides with kf_update (linear model).

}  // namespace mmnav
