#include "spades/sc/training.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "spades/bis/hand_eval.h"
#include "spades/harness/match.h"

namespace spades::sc {
namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double Dot(const FeatureVector& w, const FeatureVector& x) {
  double s = 0.0;
  for (int i = 0; i < kNumFeatures; ++i) s += w[i] * x[i];
  return s;
}

}  // namespace

std::vector<TrainingExample> ExamplesFromRound(const RoundLog& log) {
  std::vector<TrainingExample> out;
  const auto tricks = log.TricksBySeat();
  std::vector<int> before;
  for (const SeatBid& sb : log.bids) {
    if (sb.bid.is_nil() && !sb.bid.blind) {
      out.push_back({before, bis::NilValue(log.hands[Index(sb.seat)]), tricks[Index(sb.seat)] == 0});
    }
    before.push_back(sb.bid.value);
  }
  return out;
}

std::vector<TrainingExample> GenerateDataset(const DatasetConfig& config) {
  harness::MatchConfig match;
  match.a_bidder = "bis-noisy";
  match.b_bidder = "bis-noisy";
  match.a_player = config.player;
  match.b_player = config.player;
  match.seed = config.seed;
  match.goals = config.goals;
  match.swap_seats = false;
  match.threads = config.threads;
  harness::AgentResources res;
  res.curves = config.curves;
  res.explore_rate = config.explore_rate;

  std::vector<TrainingExample> data;
  std::int64_t rounds = 0;
  // Games are played in batches until enough rounds exist; the first
  // `config.rounds` rounds in game order are kept.
  int next_game = 0;
  while (rounds < config.rounds) {
    match.games = next_game + 256;
    for (int g = next_game; g < match.games && rounds < config.rounds; ++g) {
      const GameResult game = harness::PlayMatchGame(match, res, g);
      for (const RoundLog& log : game.rounds) {
        if (rounds == config.rounds) break;
        ++rounds;
        for (auto& ex : ExamplesFromRound(log)) data.push_back(std::move(ex));
      }
    }
    next_game = match.games;
  }
  return data;
}

void WriteDataset(std::ostream& out, std::span<const TrainingExample> data) {
  for (const TrainingExample& ex : data) {
    out << nlohmann::json{{"seq", ex.sequence}, {"nil_value", ex.nil_value}, {"success", ex.success}}.dump()
        << '\n';
  }
}

std::vector<TrainingExample> ReadDataset(std::istream& in) {
  std::vector<TrainingExample> data;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TrainingExample ex{j.at("seq").get<std::vector<int>>(), j.at("nil_value").get<double>(),
                         j.at("success").get<bool>()};
      if (ex.sequence.size() > 3) throw std::invalid_argument("sequence longer than 3");
      for (int v : ex.sequence) {
        if (v < 0 || v > kMaxBid) throw std::invalid_argument("bid value out of range");
      }
      data.push_back(std::move(ex));
    } catch (const std::exception& e) {
      throw std::invalid_argument("dataset line " + std::to_string(n) + ": " + e.what());
    }
  }
  return data;
}

FeatureVector Features(std::span<const int> sequence, double nil_value, bool single_curve) {
  FeatureVector x{};
  x[kIntercept] = 1.0;
  x[kNilValue] = nil_value;
  if (single_curve) return x;
  const std::size_t n = sequence.size();
  x[kFirstToBid + static_cast<int>(n)] = 1.0;
  if (n >= 2) {
    const int partner = sequence[n - 2];
    x[kPartnerBid] = partner / 13.0;
    x[kPartnerNil] = partner == 0 ? 1.0 : 0.0;
  }
  int opp_sum = 0;
  bool opp_nil = false;
  if (n >= 1) {
    opp_sum += sequence[n - 1];
    opp_nil |= sequence[n - 1] == 0;
  }
  if (n >= 3) {
    opp_sum += sequence[0];
    opp_nil |= sequence[0] == 0;
  }
  x[kOpponentSum] = opp_sum / 26.0;
  x[kOpponentNil] = opp_nil ? 1.0 : 0.0;
  return x;
}

double SCModel::Predict(std::span<const int> sequence, double nil_value) const {
  return Sigmoid(Dot(weights, Features(sequence, nil_value, single_curve)));
}

double Objective(const SCModel& model, std::span<const TrainingExample> data, double l2) {
  double ll = 0.0;
  for (const TrainingExample& ex : data) {
    const double z = Dot(model.weights, Features(ex.sequence, ex.nil_value, model.single_curve));
    // log(sigmoid(z)) and log(1 - sigmoid(z)) without overflow.
    const double log_p = -std::log1p(std::exp(-std::abs(z))) + std::min(z, 0.0);
    const double log_q = log_p - z;
    ll += ex.success ? log_p : log_q;
  }
  ll /= static_cast<double>(data.size());
  double penalty = 0.0;
  for (int i = 1; i < kNumFeatures; ++i) penalty += model.weights[i] * model.weights[i];
  return ll - 0.5 * l2 * penalty;
}

FeatureVector Gradient(const SCModel& model, std::span<const TrainingExample> data, double l2) {
  FeatureVector g{};
  for (const TrainingExample& ex : data) {
    const FeatureVector x = Features(ex.sequence, ex.nil_value, model.single_curve);
    const double err = (ex.success ? 1.0 : 0.0) - Sigmoid(Dot(model.weights, x));
    for (int i = 0; i < kNumFeatures; ++i) g[i] += err * x[i];
  }
  for (int i = 0; i < kNumFeatures; ++i) {
    g[i] /= static_cast<double>(data.size());
    if (i != kIntercept) g[i] -= l2 * model.weights[i];
  }
  return g;
}

SCModel Train(std::vector<TrainingExample> data, const TrainConfig& config) {
  if (data.empty()) throw std::invalid_argument("empty training set");
  const auto wins = std::count_if(data.begin(), data.end(), [](const auto& e) { return e.success; });
  if (wins == 0 || wins == static_cast<long>(data.size())) {
    throw std::invalid_argument("training set has a single outcome");
  }
  std::sort(data.begin(), data.end(), [](const TrainingExample& a, const TrainingExample& b) {
    if (a.sequence != b.sequence) return a.sequence < b.sequence;
    if (a.nil_value != b.nil_value) return a.nil_value < b.nil_value;
    return a.success < b.success;
  });
  SCModel model;
  model.single_curve = config.single_curve;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const FeatureVector g = Gradient(model, data, config.l2);
    for (int i = 0; i < kNumFeatures; ++i) model.weights[i] += config.learning_rate * g[i];
    model.weights[kNilValue] = std::max(0.0, model.weights[kNilValue]);
  }
  return model;
}

SCTable BuildTable(const SCModel& model) {
  SCTable table;
  for (int s = 0; s < kNumSequences; ++s) {
    const std::vector<int> seq = SequenceAt(s);
    Curve& curve = table.mutable_curve(s);
    for (int k = 0; k < kGridPoints; ++k) curve[k] = model.Predict(seq, k / 100.0);
  }
  table.MakeMonotone();
  table.source = model.single_curve ? "logistic regression, single curve" : "logistic regression";
  return table;
}

nlohmann::json ToJson(const SCModel& model) {
  static const char* const kNames[kNumFeatures] = {
      "intercept", "nil_value",  "first_to_bid", "second_to_bid", "third_to_bid",
      "fourth_to_bid", "partner_bid", "partner_nil", "opponent_sum", "opponent_nil"};
  nlohmann::json w = nlohmann::json::object();
  for (int i = 0; i < kNumFeatures; ++i) w[kNames[i]] = model.weights[i];
  return {{"single_curve", model.single_curve}, {"weights", w}};
}

}  // namespace spades::sc
