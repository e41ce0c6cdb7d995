#pragma once

#include <optional>
#include <vector>

#include "mmnav/fiveg/link_classification.hpp"
#include "mmnav/fiveg/positioning.hpp"
#include "mmnav/fusion/types.hpp"

namespace mmnav {

/// All paths received at one 5G epoch (single serving BS).
struct EpochObservations {
  double timestamp = 0.0;
  std::vector<ChannelObservation> paths;
};

/// Group a time-ordered channel stream into per-epoch batches.
std::vector<EpochObservations> group_epochs(const std::vector<ChannelObservation>& stream);

/// Outcome of the per-epoch measurement exclusion stage.
struct ExclusionResult {
  std::optional<ChannelObservation> los;     ///< strongest detected direct path
  std::vector<ChannelObservation> sbr;       ///< accepted single-bounce paths
  int nlos_count = 0;                        ///< paths flagged NLoS
  int higher_order_count = 0;                ///< NLoS paths rejected by the classifier
};

/// Route each path: LoS detections feed the direct solver (strongest wins,
/// surplus detections are demoted to NLoS), NLoS paths pass through the
/// reflection-order classifier and only single-bounce survivors remain.
ExclusionResult exclude_measurements(const std::vector<ChannelObservation>& paths,
                                     const PropagationModel& model,
                                     const ReflectionOrderClassifier& classifier);

/// Channel-parameter noise assumed by the filter when building R.
struct MeasurementNoise {
  double sigma_rtt_s = 1e-9;
  double sigma_aod_az_rad = 0.5 * M_PI / 180.0;
  double sigma_aod_el_rad = 0.5 * M_PI / 180.0;
  double sigma_aoa_az_rad = 0.5 * M_PI / 180.0;
  double sigma_odometer_mps = 0.1;
  double altitude_sigma_2d_m = 2.0;   ///< constant-height uncertainty for 2D fixes
  double r_floor_m = 0.02;            ///< lower bound on any position sigma
  double sbr_inflation = 2.0;         ///< SBR rows inflated relative to LoS
};

/// Direct-path fix with covariance propagated through the solver geometry.
PositionFix compute_los_fix(const ChannelObservation& obs, const BaseStation& bs,
                            const MeasurementNoise& noise, bool use_3d,
                            double assumed_ue_height, const SceneFrame& frame);

/// Single-bounce fix from >=2 classified paths, or nullopt when the line
/// set is insufficient or ill-conditioned.  `pseudo_height_enu` supplies the
/// constant-height parameter (last fused altitude).
std::optional<PositionFix> compute_sbr_fix(const std::vector<ChannelObservation>& sbr,
                                           const BaseStation& bs,
                                           const MeasurementNoise& noise,
                                           double assumed_ue_height,
                                           double pseudo_height_enu,
                                           const SceneFrame& frame);

/// Non-holonomic motion-constraint gate for a single-bounce fix.
///
/// Bounds the geodetic displacement between the previous-epoch posterior and
/// the fix by the distance the odometer says the vehicle can have travelled:
///   dlat_max = |cos A cos p| (|v_odo| + eps) dt / (r_m + h)
///   dlon_max = |sin A cos p| (|v_odo| + eps) dt / ((r_n + h) cos phi)
/// Returns true (include) when both wrapped displacement components are
/// strictly inside their bounds.
bool assess_sbr_fix(const PositionFix& fix, const NavState& previous_posterior,
                    double odometer_speed, double quantization_error, double dt,
                    const EarthModel& earth);

/// Measurement bundles for the linear update.
MeasurementBundle position_bundle(const PositionFix& fix, const MeasurementNoise& noise,
                                  const EarthModel& earth);
MeasurementBundle velocity_bundle(const OdometerSample& odo, const Attitude& attitude,
                                  const MeasurementNoise& noise);

}  // namespace mmnav
