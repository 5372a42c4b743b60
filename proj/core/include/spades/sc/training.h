#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/engine/round.h"
#include "spades/sc/sc_table.h"

namespace spades::sc {

// One nil bid and its outcome.
struct TrainingExample {
  std::vector<int> sequence;  // values of the bids made before the nil
  double nil_value = 0.0;
  bool success = false;       // the niler took no trick

  friend bool operator==(const TrainingExample&, const TrainingExample&) = default;
};

// Regular (not blind) nil bids of a finished round.
std::vector<TrainingExample> ExamplesFromRound(const RoundLog& log);

struct DatasetConfig {
  std::int64_t rounds = 200000;
  double explore_rate = 0.1;  // chance that a bid's nil decision is flipped
  std::uint64_t seed = 1;
  std::string player = "srp";
  GameGoals goals;
  std::shared_ptr<const SCTable> curves;  // used by the noisy bidders; identity if null
  int threads = 0;
};

// Self-play games with four noisy BIS bidders until `rounds` rounds are played.
std::vector<TrainingExample> GenerateDataset(const DatasetConfig& config);

void WriteDataset(std::ostream& out, std::span<const TrainingExample> data);
std::vector<TrainingExample> ReadDataset(std::istream& in);

enum Feature : int {
  kIntercept,
  kNilValue,
  kFirstToBid,    // position one-hot, by number of earlier bids
  kSecondToBid,
  kThirdToBid,
  kFourthToBid,
  kPartnerBid,    // partner's value / 13, when visible
  kPartnerNil,
  kOpponentSum,   // visible opponent values / 26
  kOpponentNil,
  kNumFeatures,
};

using FeatureVector = std::array<double, kNumFeatures>;

// With `single_curve` only the intercept and nilValue are set.
FeatureVector Features(std::span<const int> sequence, double nil_value, bool single_curve = false);

struct TrainConfig {
  double l2 = 1e-4;  // not applied to the intercept
  double learning_rate = 2.0;
  int epochs = 4000;
  bool single_curve = false;
};

struct SCModel {
  FeatureVector weights{};
  bool single_curve = false;

  double Predict(std::span<const int> sequence, double nil_value) const;
};

// Mean log-likelihood minus the L2 penalty, and its gradient.
double Objective(const SCModel& model, std::span<const TrainingExample> data, double l2);
FeatureVector Gradient(const SCModel& model, std::span<const TrainingExample> data, double l2);

// Full-batch gradient ascent; the nilValue weight is projected to be
// non-negative after every step. The result does not depend on the order
// of `data`. Throws std::invalid_argument when the data is empty or has a
// single outcome.
SCModel Train(std::vector<TrainingExample> data, const TrainConfig& config);

SCTable BuildTable(const SCModel& model);

nlohmann::json ToJson(const SCModel& model);

}  // namespace spades::sc
