#pragma once

#include <cstdint>

#include "mmnav/ins/types.hpp"

namespace mmnav {

/// Corrupt a perfect IMU stream with constant bias, first-order Gauss-Markov
/// drift and white noise scaled by sqrt(sample rate).  Deterministic for a
/// fixed seed.
ImuStream corrupt_imu(const ImuStream& truth, const ImuErrorModel& model, uint64_t seed);

/// Corrupt a perfect odometer stream: quantize to the sample resolution and
/// add white noise of std `sigma`.  Deterministic for a fixed seed.
OdometerStream corrupt_odometer(const OdometerStream& truth, double sigma, uint64_t seed);

}  // namespace mmnav
