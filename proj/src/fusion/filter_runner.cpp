#include "mmnav/fusion/filter_runner.hpp"

#include <random>
#include <unordered_map>

#include "mmnav/errors.hpp"
#include "mmnav/ins/mechanization.hpp"

namespace mmnav {

namespace {

constexpr double kTimeEps = 1e-9;

template <typename Stream>
void check_monotonic(const Stream& stream, const char* what) {
  for (size_t i = 1; i < stream.size(); ++i) {
    if (stream[i].timestamp < stream[i - 1].timestamp - kTimeEps) {
      throw StreamOrdering(std::string(what) + ": non-monotonic timestamps");
    }
  }
}

}  // namespace

FilterRun run_filter(const ImuStream& imu, const OdometerStream& odometer,
                     const std::vector<ChannelObservation>& channel,
                     const std::vector<BaseStation>& base_stations,
                     const SceneFrame& frame, const RunnerConfig& config) {
  if (imu.size() < 2) {
    throw ConfigError("run_filter: need at least two IMU samples");
  }
  check_monotonic(imu, "imu");
  check_monotonic(odometer, "odometer");
  check_monotonic(channel, "channel");

  std::unordered_map<int, BaseStation> bs_by_id;
  for (const auto& bs : base_stations) bs_by_id[bs.id] = bs;

  const EarthModel& earth = frame.earth;
  TransitionFn transition = [&earth](const NavState& s, const ImuSample& u, double dt) {
    return mechanize_step(s, u, dt, earth);
  };
  auto classifier = make_classifier(config.classifier);

  std::mt19937_64 fix_rng(config.fix_noise_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto maybe_inject_fix_noise = [&](PositionFix& fix) {
    if (!config.fix_noise_sigma_enu.has_value()) return;
    const Eigen::Vector3d& sigma = *config.fix_noise_sigma_enu;
    Eigen::Vector3d perturbed = fix.enu;
    for (int i = 0; i < 3; ++i) perturbed(i) += sigma(i) * gauss(fix_rng);
    fix.enu = perturbed;
    fix.position = enu_to_geodetic(perturbed, frame.origin, frame.earth);
    fix.covariance_enu = sigma.cwiseProduct(sigma).asDiagonal();
  };

  auto epochs = group_epochs(channel);

  FilterRun run;
  run.series.reserve(imu.size());
  FilterState state = config.init;
  state.epoch = imu.front().timestamp;

  NavState prev_epoch_nav = state.nav;  // posterior at the previous 5G epoch
  double next_epoch_tick = imu.front().timestamp + config.epoch_period_s;
  double last_odo_speed = 0.0;
  size_t io = 0, ie = 0;

  auto process_epoch = [&](const EpochObservations& epoch, uint32_t& mask) {
    ++run.counters.epochs_total;
    const auto excl = exclude_measurements(epoch.paths, config.propagation, *classifier);
    run.counters.nlos_paths += excl.nlos_count;
    run.counters.higher_order_rejected += excl.higher_order_count;

    if (config.los_enabled && excl.los.has_value()) {
      auto it = bs_by_id.find(excl.los->bs_id);
      if (it != bs_by_id.end()) {
        PositionFix fix =
            compute_los_fix(*excl.los, it->second, config.measurement_noise,
                            config.use_3d_los, config.assumed_ue_height_m, frame);
        maybe_inject_fix_noise(fix);
        state = kf_update(state, position_bundle(fix, config.measurement_noise, earth));
        mask |= kSourceLos;
        ++run.counters.los_fixes_applied;
      }
    }

    if (config.sbr_enabled && excl.sbr.size() >= 2) {
      auto it = bs_by_id.find(excl.sbr.front().bs_id);
      if (it != bs_by_id.end()) {
        const double pseudo_height =
            state.nav.position.altitude - frame.origin.altitude;
        auto fix = compute_sbr_fix(excl.sbr, it->second, config.measurement_noise,
                                   config.assumed_ue_height_m, pseudo_height, frame);
        if (fix.has_value()) {
          maybe_inject_fix_noise(*fix);
          const bool include =
              !config.assessment_enabled ||
              assess_sbr_fix(*fix, prev_epoch_nav, last_odo_speed,
                             config.assessment_epsilon_mps, config.epoch_period_s,
                             earth);
          if (include) {
            state =
                kf_update(state, position_bundle(*fix, config.measurement_noise, earth));
            mask |= kSourceSbr;
            ++run.counters.sbr_fixes_applied;
          } else {
            ++run.counters.sbr_fixes_discarded;
          }
        } else {
          ++run.counters.sbr_insufficient;
        }
      }
    } else if (config.sbr_enabled && !excl.sbr.empty()) {
      ++run.counters.sbr_insufficient;
    }
  };

  for (size_t k = 0; k + 1 < imu.size(); ++k) {
    const double t_next = imu[k + 1].timestamp;
    const double dt = t_next - imu[k].timestamp;
    if (dt <= 0.0) throw StreamOrdering("imu: non-increasing timestamps");

    state = config.filter == FilterType::Ukf
                ? ukf_predict(state, imu[k], config.process_noise, config.ukf, dt,
                              transition)
                : ekf_predict(state, imu[k], config.process_noise, dt, transition,
                              config.fd_step_scale);
    uint32_t mask = 0;

    while (io < odometer.size() && odometer[io].timestamp <= t_next + kTimeEps) {
      last_odo_speed = odometer[io].speed;
      if (config.odometer_enabled) {
        state = kf_update(state, velocity_bundle(odometer[io], state.nav.attitude,
                                                 config.measurement_noise));
        mask |= kSourceOdometer;
        ++run.counters.odometer_updates;
      }
      ++io;
    }

    while (ie < epochs.size() && epochs[ie].timestamp <= t_next + kTimeEps) {
      process_epoch(epochs[ie], mask);
      ++ie;
    }

    // Posterior snapshot on the 5G epoch grid, consumed by the motion
    // constraint one epoch later.
    while (t_next >= next_epoch_tick - kTimeEps) {
      prev_epoch_nav = state.nav;
      next_epoch_tick += config.epoch_period_s;
    }

    state.epoch = t_next;
    run.series.push_back({t_next, state.nav, state.covariance, mask});
  }
  return run;
}

}  // namespace mmnav
