#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "mmnav/fiveg/types.hpp"

namespace mmnav {

/// One-way propagation distance from a round-trip time measurement.
double rtt_to_distance(double rtt);

/// 3D direct-path fix: p = p_bs + d * (sin a cos e, cos a cos e, sin e).
PositionFix los_fix_3d(const BaseStation& bs, double distance_3d, double aod_azimuth,
                       double aod_elevation, const SceneFrame& frame);

/// 2D direct-path fix under a constant-height assumption.
PositionFix los_fix_2d(const BaseStation& bs, double distance_2d, double aod_azimuth,
                       double height, const SceneFrame& frame);

/// Straight-line locus of the UE for a single-bounce path.
///
/// `ue_side_azimuth` is the azimuth from the UE toward the scatterer (the
/// reverse arrival direction) and `bs_side_azimuth` the azimuth from the BS
/// toward the scatterer (the departure direction); `distance_2d` is the
/// total horizontal path length.
SbrLine sbr_line(const BaseStation& bs, double ue_side_azimuth, double bs_side_azimuth,
                 double distance_2d);

/// Scatterer and UE positions for a candidate BS-to-scatterer range r.
/// Requires r in (0, d).
std::pair<Eigen::Vector2d, Eigen::Vector2d> sbr_point_for_r(const BaseStation& bs,
                                                            double ue_side_azimuth,
                                                            double bs_side_azimuth,
                                                            double distance_2d, double r);

/// Options for the line-intersection solver.
struct SbrFixOptions {
  double parallel_threshold_rad = 5.0 * M_PI / 180.0;
  double line_sigma_m = 0.5;        ///< perpendicular noise scale per line
  double altitude_variance = 25.0;  ///< [m^2] pseudo-altitude variance
};

/// Intersect two or more single-bounce lines (exact for two, least squares
/// beyond) at the given constant height.
///
/// Throws InsufficientPaths with fewer than two lines and IllConditioned
/// when every pair of lines is within the parallelism threshold.
PositionFix sbr_fix(const std::vector<SbrLine>& lines, double height,
                    const SceneFrame& frame, const SbrFixOptions& options = {});

/// Perpendicular distance from a point to an SbrLine [m].
double sbr_line_distance(const SbrLine& line, const Eigen::Vector2d& point);

}  // namespace mmnav
