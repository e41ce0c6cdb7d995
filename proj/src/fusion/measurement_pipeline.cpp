#include "mmnav/fusion/measurement_pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/ins/mechanization.hpp"

namespace mmnav {

std::vector<EpochObservations> group_epochs(const std::vector<ChannelObservation>& stream) {
  std::vector<EpochObservations> epochs;
  for (const auto& obs : stream) {
    if (epochs.empty() || obs.timestamp > epochs.back().timestamp + 1e-9) {
      epochs.push_back({obs.timestamp, {}});
    }
    epochs.back().paths.push_back(obs);
  }
  return epochs;
}

ExclusionResult exclude_measurements(const std::vector<ChannelObservation>& paths,
                                     const PropagationModel& model,
                                     const ReflectionOrderClassifier& classifier) {
  ExclusionResult result;
  std::vector<ChannelObservation> nlos;
  for (const auto& obs : paths) {
    if (detect_nlos(obs.rtt, obs.rss, model) == LinkType::Los) {
      // At most one LoS path per BS per epoch: keep the strongest, demote
      // the rest to the multipath branch.
      if (!result.los.has_value()) {
        result.los = obs;
      } else if (obs.rss > result.los->rss) {
        nlos.push_back(*result.los);
        result.los = obs;
      } else {
        nlos.push_back(obs);
      }
    } else {
      nlos.push_back(obs);
    }
  }

  result.nlos_count = static_cast<int>(nlos.size());
  ClassifierContext context;
  context.model = model;
  context.detected_link = LinkType::Nlos;
  for (const auto& obs : nlos) {
    if (classifier.classify(obs, context) == ReflectionClass::SingleBounce) {
      result.sbr.push_back(obs);
    } else {
      ++result.higher_order_count;
    }
  }
  return result;
}

namespace {

double horizontal_component(double d3, double dz) {
  const double d2_sq = d3 * d3 - dz * dz;
  return d2_sq > 0.0 ? std::sqrt(d2_sq) : 0.0;
}

}  // namespace

PositionFix compute_los_fix(const ChannelObservation& obs, const BaseStation& bs,
                            const MeasurementNoise& noise, bool use_3d,
                            double assumed_ue_height, const SceneFrame& frame) {
  const double d3 = rtt_to_distance(obs.rtt);
  const double sigma_d = kSpeedOfLight * noise.sigma_rtt_s / 2.0;

  PositionFix fix;
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  if (use_3d) {
    fix = los_fix_3d(bs, d3, obs.aod_azimuth, obs.aod_elevation, frame);
    const double sa = std::sin(obs.aod_azimuth), ca = std::cos(obs.aod_azimuth);
    const double se = std::sin(obs.aod_elevation), ce = std::cos(obs.aod_elevation);
    Eigen::Matrix3d jac;
    jac.col(0) << sa * ce, ca * ce, se;                      // d(range)
    jac.col(1) << d3 * ca * ce, -d3 * sa * ce, 0.0;          // d(azimuth)
    jac.col(2) << -d3 * sa * se, -d3 * ca * se, d3 * ce;     // d(elevation)
    const Eigen::Vector3d in_var(sigma_d * sigma_d,
                                 noise.sigma_aod_az_rad * noise.sigma_aod_az_rad,
                                 noise.sigma_aod_el_rad * noise.sigma_aod_el_rad);
    cov = jac * in_var.asDiagonal() * jac.transpose();
  } else {
    const double d2 = horizontal_component(d3, bs.enu(2) - assumed_ue_height);
    fix = los_fix_2d(bs, d2, obs.aod_azimuth, assumed_ue_height, frame);
    const double sa = std::sin(obs.aod_azimuth), ca = std::cos(obs.aod_azimuth);
    Eigen::Matrix<double, 3, 2> jac;
    jac.col(0) << sa, ca, 0.0;
    jac.col(1) << d2 * ca, -d2 * sa, 0.0;
    const Eigen::Vector2d in_var(sigma_d * sigma_d,
                                 noise.sigma_aod_az_rad * noise.sigma_aod_az_rad);
    cov = jac * in_var.asDiagonal() * jac.transpose();
    cov(2, 2) = noise.altitude_sigma_2d_m * noise.altitude_sigma_2d_m;
  }

  const double floor_var = noise.r_floor_m * noise.r_floor_m;
  for (int i = 0; i < 3; ++i) cov(i, i) = std::max(cov(i, i), floor_var);
  fix.covariance_enu = cov;
  fix.epoch = obs.timestamp;
  return fix;
}

std::optional<PositionFix> compute_sbr_fix(const std::vector<ChannelObservation>& sbr,
                                           const BaseStation& bs,
                                           const MeasurementNoise& noise,
                                           double assumed_ue_height,
                                           double pseudo_height_enu,
                                           const SceneFrame& frame) {
  if (sbr.size() < 2) return std::nullopt;

  std::vector<SbrLine> lines;
  lines.reserve(sbr.size());
  double mean_range = 0.0;
  for (const auto& obs : sbr) {
    const double d3 = rtt_to_distance(obs.rtt);
    const double d2 = horizontal_component(d3, bs.enu(2) - assumed_ue_height);
    if (d2 <= 0.0) continue;
    try {
      SbrLine line = sbr_line(bs, obs.aoa_azimuth, obs.aod_azimuth, d2);
      line.bs_id = obs.bs_id;
      line.path_index = obs.path_index;
      lines.push_back(line);
      mean_range += d2;
    } catch (const DegenerateGeometry&) {
      // Anti-parallel geometry carries no locus information; skip the path.
    }
  }
  if (lines.size() < 2) return std::nullopt;
  mean_range /= static_cast<double>(lines.size());

  SbrFixOptions options;
  const double angle_sigma = std::hypot(noise.sigma_aod_az_rad, noise.sigma_aoa_az_rad);
  options.line_sigma_m =
      std::max(noise.r_floor_m, noise.sbr_inflation * mean_range * angle_sigma);
  // Pseudo-altitude: carried from the last fused solution at 10x the LoS
  // altitude variance.
  const double sigma_d = kSpeedOfLight * noise.sigma_rtt_s / 2.0;
  const double los_alt_var = std::max(sigma_d * sigma_d, noise.r_floor_m * noise.r_floor_m);
  options.altitude_variance = 10.0 * los_alt_var;

  try {
    PositionFix fix = sbr_fix(lines, pseudo_height_enu, frame, options);
    fix.epoch = sbr.front().timestamp;
    return fix;
  } catch (const InsufficientPaths&) {
    return std::nullopt;
  } catch (const IllConditioned&) {
    return std::nullopt;
  }
}

bool assess_sbr_fix(const PositionFix& fix, const NavState& previous_posterior,
                    double odometer_speed, double quantization_error, double dt,
                    const EarthModel& earth) {
  const double lat = previous_posterior.position.latitude;
  const double h = previous_posterior.position.altitude;
  const auto radii = curvature_radii(lat, earth);

  const double cp = std::cos(previous_posterior.attitude.pitch);
  const double ca = std::cos(previous_posterior.attitude.azimuth);
  const double sa = std::sin(previous_posterior.attitude.azimuth);
  const double reach = std::abs(odometer_speed + quantization_error) * dt;

  const double dlat_max = std::abs(ca * cp) * reach / (radii.r_m + h);
  const double dlon_max =
      std::abs(sa * cp) * reach / ((radii.r_n + h) * std::cos(lat));

  const double dlat = std::abs(lat - fix.position.latitude);
  const double dlon =
      std::abs(wrap_pi(previous_posterior.position.longitude - fix.position.longitude));
  return dlat < dlat_max && dlon < dlon_max;
}

MeasurementBundle position_bundle(const PositionFix& fix, const MeasurementNoise& noise,
                                  const EarthModel& earth) {
  const auto radii = curvature_radii(fix.position.latitude, earth);
  const double m_per_rad_lat = radii.r_m + fix.position.altitude;
  const double m_per_rad_lon =
      (radii.r_n + fix.position.altitude) * std::cos(fix.position.latitude);

  const double floor_var = noise.r_floor_m * noise.r_floor_m;
  MeasurementBundle bundle;
  bundle.z.head<3>() << fix.position.latitude, fix.position.longitude,
      fix.position.altitude;
  bundle.available = {true, true, true, false, false, false};
  bundle.r_diag(0) =
      std::max(fix.covariance_enu(1, 1), floor_var) / (m_per_rad_lat * m_per_rad_lat);
  bundle.r_diag(1) =
      std::max(fix.covariance_enu(0, 0), floor_var) / (m_per_rad_lon * m_per_rad_lon);
  bundle.r_diag(2) = std::max(fix.covariance_enu(2, 2), floor_var);
  return bundle;
}

MeasurementBundle velocity_bundle(const OdometerSample& odo, const Attitude& attitude,
                                  const MeasurementNoise& noise) {
  MeasurementBundle bundle;
  bundle.z.tail<3>() = odometer_velocity_l(odo.speed, attitude);
  bundle.available = {false, false, false, true, true, true};
  const double q_var = odo.quantization * odo.quantization / 12.0;
  const double var = noise.sigma_odometer_mps * noise.sigma_odometer_mps + q_var;
  bundle.r_diag.tail<3>().setConstant(var);
  return bundle;
}

}  // namespace mmnav
