#pragma once

#include <Eigen/Core>
#include <vector>

#include "mmnav/geo/frames.hpp"
#include "mmnav/geo/rotation.hpp"

namespace mmnav {

/// Full position/velocity/attitude estimate.  The quaternion is the
/// canonical attitude storage; the Euler attitude is kept consistent with
/// it (sync_from_quaternion / sync_from_attitude).
struct NavState {
  GeodeticPosition position;
  Eigen::Vector3d velocity_enu = Eigen::Vector3d::Zero();  // [m/s] east, north, up
  Attitude attitude;
  Quaternion quaternion;

  /// Rebuild the Euler attitude from the quaternion.
  void sync_from_quaternion() {
    attitude = attitude_from_rotation(rotation_from_quaternion(quaternion));
  }
  /// Rebuild the quaternion from the Euler attitude.
  void sync_from_attitude() { quaternion = quaternion_from_attitude(attitude); }

  static NavState make(const GeodeticPosition& pos, const Eigen::Vector3d& vel,
                       const Attitude& att) {
    NavState s;
    s.position = pos;
    s.velocity_enu = vel;
    s.attitude = att;
    s.sync_from_attitude();
    return s;
  }
};

/// One IMU epoch: specific force [m/s^2] and angular rate [rad/s] in the
/// body frame (x right, y forward, z up).
struct ImuSample {
  double timestamp = 0.0;  // [s]
  Eigen::Vector3d specific_force = Eigen::Vector3d::Zero();
  Eigen::Vector3d angular_rate = Eigen::Vector3d::Zero();
};

/// Wheel-odometer epoch: signed forward speed in the body frame.
struct OdometerSample {
  double timestamp = 0.0;      // [s]
  double speed = 0.0;          // [m/s], positive forward
  double quantization = 0.0;   // [m/s] resolution of the speed readout
};

/// First-order Gauss-Markov parameters for one sensor triad axis set.
struct GaussMarkov {
  Eigen::Vector3d sigma = Eigen::Vector3d::Zero();  // stationary std
  double correlation_time = 3600.0;                 // [s]
};

/// Stochastic error model for a consumer/tactical IMU.  Noise densities are
/// per sqrt(Hz); per-sample sigma is density * sqrt(rate).
struct ImuErrorModel {
  Eigen::Vector3d accel_noise_density = Eigen::Vector3d::Zero();  // [m/s^2/sqrt(Hz)]
  Eigen::Vector3d gyro_noise_density = Eigen::Vector3d::Zero();   // [rad/s/sqrt(Hz)]
  Eigen::Vector3d accel_bias = Eigen::Vector3d::Zero();           // [m/s^2] constant
  Eigen::Vector3d gyro_bias = Eigen::Vector3d::Zero();            // [rad/s] constant
  GaussMarkov accel_drift;                                        // [m/s^2]
  GaussMarkov gyro_drift;                                         // [rad/s]
};

using ImuStream = std::vector<ImuSample>;
using OdometerStream = std::vector<OdometerSample>;

}  // namespace mmnav
