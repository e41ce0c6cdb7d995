#pragma once

#include <stdexcept>
#include <string>

namespace mmnav {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rotation / attitude algebra.
struct DegenerateRotation : Error { using Error::Error; };
struct GimbalProximity : Error { using Error::Error; };
struct ZeroQuaternion : Error { using Error::Error; };

// Mechanization.
struct LatitudeSingularity : Error { using Error::Error; };

// Multipath geometry.
struct DegenerateGeometry : Error { using Error::Error; };
struct InsufficientPaths : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

// Filtering.
struct CovarianceNotPsd : Error { using Error::Error; };
struct SingularInnovationCovariance : Error { using Error::Error; };
struct StreamOrdering : Error { using Error::Error; };

// Simulation.
struct InfeasibleDynamics : Error { using Error::Error; };

// Configuration / IO.
struct ConfigError : Error { using Error::Error; };

}  // namespace mmnav
