#include "mmnav/fiveg/link_classification.hpp"

#include <cassert>
#include <cmath>

#include "mmnav/constants.hpp"
#include "mmnav/errors.hpp"
#include "mmnav/fiveg/positioning.hpp"

namespace mmnav {

double free_space_path_loss_db(double distance, const PropagationModel& model) {
  return 20.0 * std::log10(4.0 * M_PI * distance * model.carrier_hz / kSpeedOfLight);
}

double rss_from_distance(double distance, int bounces, const PropagationModel& model) {
  return model.tx_power_dbm - free_space_path_loss_db(distance, model) -
         bounces * model.reflection_loss_db;
}

double distance_from_rss(double rss, const PropagationModel& model) {
  return kSpeedOfLight / (4.0 * M_PI * model.carrier_hz) *
         std::pow(10.0, (model.tx_power_dbm - rss) / 20.0);
}

LinkType detect_nlos(double rtt, double rss, const PropagationModel& model) {
  const double d_rtt = rtt_to_distance(rtt);
  const double d_rss = distance_from_rss(rss, model);
  const double excess = d_rss - d_rtt;
  return excess > model.nlos_abs_threshold_m + model.nlos_rel_threshold * d_rtt
             ? LinkType::Nlos
             : LinkType::Los;
}

ReflectionClass OracleReflectionClassifier::classify(const ChannelObservation& obs,
                                                     const ClassifierContext& context) const {
  assert(context.detected_link == LinkType::Nlos);
  (void)context;
  if (!obs.truth_bounce_count.has_value()) {
    throw ConfigError("oracle classifier requires ground-truth bounce counts");
  }
  return *obs.truth_bounce_count == 1 ? ReflectionClass::SingleBounce
                                      : ReflectionClass::HigherOrder;
}

ReflectionClass HeuristicReflectionClassifier::classify(
    const ChannelObservation& obs, const ClassifierContext& context) const {
  assert(context.detected_link == LinkType::Nlos);
  const double d_rtt = rtt_to_distance(obs.rtt);
  const double expected_single = rss_from_distance(d_rtt, 1, context.model);
  const double residual = obs.rss - expected_single;
  return residual < -residual_threshold_db_ ? ReflectionClass::HigherOrder
                                            : ReflectionClass::SingleBounce;
}

std::unique_ptr<ReflectionOrderClassifier> make_classifier(const std::string& name) {
  if (name == "oracle") return std::make_unique<OracleReflectionClassifier>();
  if (name == "heuristic") return std::make_unique<HeuristicReflectionClassifier>();
  throw ConfigError("unknown reflection classifier: " + name);
}

}  // namespace mmnav
