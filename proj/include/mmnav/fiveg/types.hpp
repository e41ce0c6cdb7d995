#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmnav/geo/frames.hpp"

namespace mmnav {

/// Local scene frame: ENU coordinates about a fixed geodetic origin.
struct SceneFrame {
  GeodeticPosition origin;
  EarthModel earth;
};

/// One received propagation path and its channel parameters.
///
/// Angle semantics (azimuths clockwise from north):
///  - aod_azimuth: departure direction at the BS, toward the first hop
///    target (the UE for a direct path, the scatterer otherwise).
///  - aoa_azimuth: arrival direction at the UE, pointing from the UE toward
///    the last hop source (the BS for a direct path, the scatterer
///    otherwise).
///  - aod_elevation: departure elevation from horizontal along the
///    vertically unfolded path.
struct ChannelObservation {
  double timestamp = 0.0;    // [s] 5G epoch time
  int bs_id = 0;
  double rtt = 0.0;          // [s] round-trip time
  double aod_azimuth = 0.0;  // [rad]
  double aod_elevation = 0.0;// [rad]
  double aoa_azimuth = 0.0;  // [rad]
  double rss = 0.0;          // [dBm]
  int path_index = 0;        // 0 = strongest at this epoch

  /// Ground-truth bounce count when the observation came from the
  /// simulator (0 = direct).  Powers the oracle classifier and scoring.
  std::optional<int> truth_bounce_count;
};

/// A 5G base station with known position.
struct BaseStation {
  int id = 0;
  Eigen::Vector3d enu = Eigen::Vector3d::Zero();  // [m] scene frame, z = antenna height
  GeodeticPosition geodetic;
  std::string array_spec = "8x1 ULA";
};

enum class FixSource { Los, Sbr };

/// A position measurement derived from 5G channel parameters.
struct PositionFix {
  GeodeticPosition position;
  Eigen::Vector3d enu = Eigen::Vector3d::Zero();             // scene frame
  Eigen::Matrix3d covariance_enu = Eigen::Matrix3d::Zero();  // [m^2] symmetric PSD
  FixSource source = FixSource::Los;
  double epoch = 0.0;
  int path_count = 0;
};

/// Locus of possible UE positions for one single-bounce path, expressed in
/// the scene x-y plane.  Default representation is y = k x + b; when the
/// slope degenerates the axes are swapped and the line is x = k y + b.
struct SbrLine {
  double k = 0.0;  // slope (dimensionless)
  double b = 0.0;  // intercept [m]
  bool axes_swapped = false;
  int bs_id = 0;
  int path_index = 0;
};

/// Free-space propagation model at mmWave frequencies with a fixed
/// per-reflection loss.
struct PropagationModel {
  double carrier_hz = 28e9;
  double tx_power_dbm = 30.0;
  double reflection_loss_db = 6.0;
  /// NLoS when d_rss - d_rtt > abs_threshold + rel_threshold * d_rtt.
  double nlos_abs_threshold_m = 5.0;
  double nlos_rel_threshold = 0.25;
};

enum class LinkType { Los, Nlos };
enum class ReflectionClass { SingleBounce, HigherOrder };

}  // namespace mmnav
