#include "mmnav/fusion/ukf.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/errors.hpp"

namespace mmnav {

StateVector pack_state(const NavState& nav) {
  StateVector x;
  x << nav.position.latitude, nav.position.longitude, nav.position.altitude,
      nav.velocity_enu, nav.attitude.pitch, nav.attitude.roll, nav.attitude.azimuth;
  return x;
}

NavState unpack_state(const StateVector& x) {
  GeodeticPosition pos{x(0), wrap_pi(x(1)), x(2)};
  Attitude att{wrap_pi(x(6)), wrap_pi(x(7)), wrap_two_pi(x(8))};
  return NavState::make(pos, x.segment<3>(3), att);
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) {
    return llt.matrixL();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const double scale = std::max(1e-300, eig.eigenvalues().cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -1e-9 * scale) {
    throw CovarianceNotPsd("psd_sqrt: matrix has a significantly negative eigenvalue");
  }
  const Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * clamped.cwiseSqrt().asDiagonal();
}

namespace {

constexpr int kAugDim = kStateDim + kInputDim;  // 15
constexpr int kSigmaCount = 2 * kAugDim + 1;    // 31

// Wrap-safe residual between two packed states.
StateVector state_residual(const StateVector& a, const StateVector& b) {
  StateVector r = a - b;
  for (int k = 0; k < kStateDim; ++k) {
    if (kAngleRow[k]) r(k) = wrap_pi(r(k));
  }
  return r;
}

}  // namespace

FilterState ukf_predict(const FilterState& state, const ImuSample& imu,
                        const ProcessNoise& q, const UkfParams& params, double dt,
                        const TransitionFn& transition) {
  const double lambda =
      params.alpha * params.alpha * (kAugDim + params.kappa) - kAugDim;
  const double gamma = std::sqrt(kAugDim + lambda);
  const double wm0 = lambda / (kAugDim + lambda);
  const double wc0 = wm0 + 1.0 - params.alpha * params.alpha + params.beta;
  const double wi = 0.5 / (kAugDim + lambda);

  // Augmented covariance is block diagonal, so its square root factors into
  // the state and input blocks.
  StateMatrix p_sym = 0.5 * (state.covariance + state.covariance.transpose());
  const Eigen::MatrixXd s_state = psd_sqrt(p_sym);
  const InputVector q_diag = q.as_input_diag();
  const InputVector s_input = q_diag.cwiseSqrt();

  const StateVector x0 = pack_state(state.nav);
  const InputVector u0 = (InputVector() << imu.specific_force, imu.angular_rate).finished();

  // Sigma points through the transition; column 0 is the central point.
  Eigen::Matrix<double, kStateDim, kSigmaCount> y;
  auto propagate = [&](const StateVector& xs, const InputVector& us) {
    ImuSample sample = imu;
    sample.specific_force = us.head<3>();
    sample.angular_rate = us.tail<3>();
    return pack_state(transition(unpack_state(xs), sample, dt));
  };
  y.col(0) = propagate(x0, u0);
  for (int j = 0; j < kStateDim; ++j) {
    const StateVector dx = gamma * s_state.col(j);
    y.col(1 + j) = propagate(x0 + dx, u0);
    y.col(1 + kAugDim + j) = propagate(x0 - dx, u0);
  }
  for (int j = 0; j < kInputDim; ++j) {
    InputVector du = InputVector::Zero();
    du(j) = gamma * s_input(j);
    y.col(1 + kStateDim + j) = propagate(x0, u0 + du);
    y.col(1 + kAugDim + kStateDim + j) = propagate(x0, u0 - du);
  }

  // Weighted mean anchored at the central point.  Linear rows use the
  // plain delta mean; angle rows use the circular sin/cos mean of the
  // wrapped deltas.
  StateVector mean = y.col(0);
  for (int k = 0; k < kStateDim; ++k) {
    if (kAngleRow[k]) {
      double s = 0.0, c = wm0;
      for (int i = 1; i < kSigmaCount; ++i) {
        const double d = wrap_pi(y(k, i) - y(k, 0));
        s += wi * std::sin(d);
        c += wi * std::cos(d);
      }
      mean(k) = y(k, 0) + std::atan2(s, c);
    } else {
      double acc = 0.0;
      for (int i = 1; i < kSigmaCount; ++i) {
        acc += wi * (y(k, i) - y(k, 0));
      }
      mean(k) = y(k, 0) + acc;
    }
  }

  StateMatrix p_next = StateMatrix::Zero();
  {
    const StateVector r0 = state_residual(y.col(0), mean);
    p_next += wc0 * r0 * r0.transpose();
    for (int i = 1; i < kSigmaCount; ++i) {
      const StateVector r = state_residual(y.col(i), mean);
      p_next += wi * r * r.transpose();
    }
  }

  FilterState next;
  next.nav = unpack_state(mean);
  next.covariance = 0.5 * (p_next + p_next.transpose());
  next.epoch = state.epoch + dt;
  return next;
}

FilterState kf_update(const FilterState& state, const MeasurementBundle& bundle) {
  const int m = bundle.active_rows();
  if (m == 0) return state;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, kStateDim);
  Eigen::VectorXd z(m);
  Eigen::VectorXd r_diag(m);
  const StateVector x = pack_state(state.nav);
  int row = 0;
  for (int j = 0; j < kMeasDim; ++j) {
    if (!bundle.available[j]) continue;
    h(row, j) = 1.0;  // measurement j observes state j directly
    z(row) = bundle.z(j);
    r_diag(row) = bundle.r_diag(j);
    ++row;
  }

  Eigen::VectorXd innovation = z - h * x;
  row = 0;
  for (int j = 0; j < kMeasDim; ++j) {
    if (!bundle.available[j]) continue;
    if (j == 1) innovation(row) = wrap_pi(innovation(row));  // longitude row
    ++row;
  }
  if (!innovation.allFinite()) {
    throw SingularInnovationCovariance("kf_update: non-finite innovation");
  }

  const Eigen::MatrixXd s =
      h * state.covariance * h.transpose() + Eigen::MatrixXd(r_diag.asDiagonal());
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw SingularInnovationCovariance("kf_update: innovation covariance not PD");
  }
  const Eigen::MatrixXd gain =
      state.covariance * h.transpose() * llt.solve(Eigen::MatrixXd::Identity(m, m));

  const StateVector x_post = x + gain * innovation;
  const StateMatrix identity_kh = StateMatrix::Identity() - gain * h;
  StateMatrix p_post = identity_kh * state.covariance * identity_kh.transpose() +
                       gain * r_diag.asDiagonal() * gain.transpose();

  FilterState next;
  next.nav = unpack_state(x_post);
  next.covariance = 0.5 * (p_post + p_post.transpose());
  next.epoch = state.epoch;
  return next;
}

}  // namespace mmnav
