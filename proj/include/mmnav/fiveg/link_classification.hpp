#pragma once

#include <memory>
#include <string>

#include "mmnav/fiveg/types.hpp"

namespace mmnav {

/// Free-space path loss [dB] at the model's carrier frequency.
double free_space_path_loss_db(double distance, const PropagationModel& model);

/// Expected RSS [dBm] of a path of the given length and bounce count.
double rss_from_distance(double distance, int bounces, const PropagationModel& model);

/// Distance [m] implied by an RSS measurement under free-space propagation.
double distance_from_rss(double rss, const PropagationModel& model);

/// Classify a link as direct or reflected by comparing the time-based range
/// against the signal-strength-based range.  Reflected paths suffer extra
/// attenuation, so the RSS-implied distance exceeds the RTT-implied one;
/// the link is NLoS when the excess clears the model thresholds (ties go
/// to LoS).
LinkType detect_nlos(double rtt, double rss, const PropagationModel& model);

/// Context handed to reflection-order classifiers.
struct ClassifierContext {
  PropagationModel model;
  LinkType detected_link = LinkType::Nlos;
};

/// Order-of-reflection identification: decides whether an NLoS path is a
/// usable single-bounce reflection.
class ReflectionOrderClassifier {
 public:
  virtual ~ReflectionOrderClassifier() = default;
  virtual ReflectionClass classify(const ChannelObservation& obs,
                                   const ClassifierContext& context) const = 0;
  virtual std::string name() const = 0;
};

/// Reads the simulator's ground-truth bounce count.  Simulation-only.
class OracleReflectionClassifier final : public ReflectionOrderClassifier {
 public:
  ReflectionClass classify(const ChannelObservation& obs,
                           const ClassifierContext& context) const override;
  std::string name() const override { return "oracle"; }
};

/// Thresholds the RSS residual against a single-reflection loss budget:
/// a path whose RSS falls more than `residual_threshold_db` below the
/// single-bounce prediction at its measured length is higher order.
class HeuristicReflectionClassifier final : public ReflectionOrderClassifier {
 public:
  explicit HeuristicReflectionClassifier(double residual_threshold_db = 3.0)
      : residual_threshold_db_(residual_threshold_db) {}

  ReflectionClass classify(const ChannelObservation& obs,
                           const ClassifierContext& context) const override;
  std::string name() const override { return "heuristic"; }

 private:
  double residual_threshold_db_;
};

std::unique_ptr<ReflectionOrderClassifier> make_classifier(const std::string& name);

}  // namespace mmnav
