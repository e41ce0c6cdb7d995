#pragma once

#include "mmnav/fusion/types.hpp"
#include "mmnav/geo/earth.hpp"

namespace mmnav {

/// Unscented prediction step.
///
/// The state is momentarily augmented with the IMU inputs (9 + 6 = 15), the
/// covariance with diag(P, Q), and 2n+1 = 31 sigma points are pushed through
/// the transition.  Angle components are recombined with a wrap-safe
/// circular (sin/cos) weighted mean anchored at the central point.
FilterState ukf_predict(const FilterState& state, const ImuSample& imu,
                        const ProcessNoise& q, const UkfParams& params, double dt,
                        const TransitionFn& transition);

/// Measurement update shared by the UKF and EKF paths.  The observation
/// model is linear (identity rows onto position and velocity states), so
/// the update is computed in exact Kalman form; angle states are wrapped
/// afterwards and the covariance re-symmetrized (Joseph form).
FilterState kf_update(const FilterState& state, const MeasurementBundle& bundle);

/// Square root of a symmetric PSD matrix by Cholesky, falling back to a
/// clamped eigendecomposition.  Throws CovarianceNotPsd when an eigenvalue
/// is below -1e-9 times the matrix scale.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m);

}  // namespace mmnav
