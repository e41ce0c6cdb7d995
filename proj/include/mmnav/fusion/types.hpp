#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>

#include "mmnav/ins/types.hpp"

namespace mmnav {

using StateVector = Eigen::Matrix<double, 9, 1>;   // [lat lon alt ve vn vu p r A]
using StateMatrix = Eigen::Matrix<double, 9, 9>;
using InputVector = Eigen::Matrix<double, 6, 1>;   // [fx fy fz wx wy wz]
using MeasVector = Eigen::Matrix<double, 6, 1>;    // [lat lon alt ve vn vu]

inline constexpr int kStateDim = 9;
inline constexpr int kInputDim = 6;
inline constexpr int kMeasDim = 6;

/// Rows of the state vector that hold angles (wrapped residual arithmetic).
inline constexpr std::array<bool, kStateDim> kAngleRow = {
    false, true, false, false, false, false, true, true, true};

StateVector pack_state(const NavState& nav);
NavState unpack_state(const StateVector& x);

/// Filter estimate: navigation state plus its 9x9 covariance.
struct FilterState {
  NavState nav;
  StateMatrix covariance = StateMatrix::Zero();
  double epoch = 0.0;
};

/// Diagonal process noise of the system inputs (white accelerometer and
/// gyroscope noise only), stored gyro-first as per-sample variances.
struct ProcessNoise {
  Eigen::Vector3d gyro_var = Eigen::Vector3d::Zero();   // [(rad/s)^2]
  Eigen::Vector3d accel_var = Eigen::Vector3d::Zero();  // [(m/s^2)^2]

  /// Diagonal ordered to match the input vector [f; w].
  InputVector as_input_diag() const {
    InputVector d;
    d << accel_var, gyro_var;
    return d;
  }
};

/// Sigma-point scaling parameters.
struct UkfParams {
  double alpha = 1e-3;
  double kappa = 0.0;
  double beta = 2.0;
};

/// Up to six measurement rows (3D position in geodetic radians/meters and
/// ENU velocity), with a per-row availability mask and diagonal noise.
struct MeasurementBundle {
  MeasVector z = MeasVector::Zero();
  std::array<bool, kMeasDim> available{};
  MeasVector r_diag = MeasVector::Zero();

  int active_rows() const {
    int n = 0;
    for (bool a : available) n += a ? 1 : 0;
    return n;
  }
};

/// State-transition callback; defaults to the strapdown mechanization.
using TransitionFn =
    std::function<NavState(const NavState&, const ImuSample&, double)>;

}  // namespace mmnav
