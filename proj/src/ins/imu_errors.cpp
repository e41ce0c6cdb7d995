#include "mmnav/ins/imu_errors.hpp"

#include <cmath>
#include <random>

namespace mmnav {

namespace {

// Stationary first-order Gauss-Markov step: x' = a x + sigma sqrt(1-a^2) w.
Eigen::Vector3d gm_step(const Eigen::Vector3d& x, const GaussMarkov& gm, double dt,
                        std::mt19937_64& rng, std::normal_distribution<double>& gauss) {
  const double a = std::exp(-dt / gm.correlation_time);
  const double s = std::sqrt(1.0 - a * a);
  Eigen::Vector3d next;
  for (int i = 0; i < 3; ++i) {
    next(i) = a * x(i) + gm.sigma(i) * s * gauss(rng);
  }
  return next;
}

}  // namespace

ImuStream corrupt_imu(const ImuStream& truth, const ImuErrorModel& model, uint64_t seed) {
  ImuStream out = truth;
  if (out.size() < 2) return out;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double dt = truth[1].timestamp - truth[0].timestamp;
  const double sqrt_rate = 1.0 / std::sqrt(dt);

  Eigen::Vector3d accel_gm = Eigen::Vector3d::Zero();
  Eigen::Vector3d gyro_gm = Eigen::Vector3d::Zero();

  for (auto& sample : out) {
    for (int i = 0; i < 3; ++i) {
      sample.specific_force(i) += model.accel_bias(i) + accel_gm(i) +
                                  model.accel_noise_density(i) * sqrt_rate * gauss(rng);
      sample.angular_rate(i) += model.gyro_bias(i) + gyro_gm(i) +
                                model.gyro_noise_density(i) * sqrt_rate * gauss(rng);
    }
    accel_gm = gm_step(accel_gm, model.accel_drift, dt, rng, gauss);
    gyro_gm = gm_step(gyro_gm, model.gyro_drift, dt, rng, gauss);
  }
  return out;
}

OdometerStream corrupt_odometer(const OdometerStream& truth, double sigma, uint64_t seed) {
  OdometerStream out = truth;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& sample : out) {
    double v = sample.speed + sigma * gauss(rng);
    if (sample.quantization > 0.0) {
      v = std::round(v / sample.quantization) * sample.quantization;
    }
    sample.speed = v;
  }
  return out;
}

}  // namespace mmnav
