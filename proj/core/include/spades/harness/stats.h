#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/engine/round.h"
#include "spades/players/knowledge.h"

namespace spades::harness {

// One-sided 95% Wilson bounds for `wins` out of `n`.
inline constexpr double kWilsonZ = 1.645;
double WilsonLower(std::int64_t wins, std::int64_t n, double z = kWilsonZ);
double WilsonUpper(std::int64_t wins, std::int64_t n, double z = kWilsonZ);

// Spearman rank correlation with average ranks for ties.
double SpearmanCorrelation(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr int kPointsBucket = 10;

// Aggregates over rounds seen from "side A" (RoundLog::side_a). Every field
// is a pure function of the logs fed to Add, so stats rebuilt from persisted
// logs equal the ones collected online.
struct MatchStats {
  std::int64_t games = 0;
  std::int64_t wins_a = 0;
  std::int64_t rounds = 0;
  std::array<std::int64_t, 2> points{};     // [A, B], summed round deltas
  std::array<std::int64_t, 2> nil_bids{};   // including blind nils
  std::array<std::int64_t, 2> nil_made{};
  std::array<std::int64_t, 2> blind_nils{};

  // Partnership round points, bucketed by kPointsBucket, both sides pooled.
  std::map<int, std::int64_t> nil_round_points;
  std::map<int, std::int64_t> regular_round_points;
  std::map<int, std::int64_t> sum_bids;
  std::map<int, std::int64_t> points_by_sum_bids;  // both partnerships' deltas
  std::map<int, std::int64_t> legal_counts;        // branching factor histogram
  // Dealer (last bidder) holding the ace of spades, by the sum of the first
  // three bids: {holding, total}.
  std::map<int, std::array<std::int64_t, 2>> fourth_seat_ace;
  std::array<std::int64_t, players::kNumRoundTypes> round_types{};
  std::array<std::int64_t, players::kNumRoundTypes> round_type_points_a{};

  // Throws RuleViolation when the log does not replay.
  void Add(const RoundLog& log);
  void Merge(const MatchStats& other);

  double win_rate_a() const { return games ? static_cast<double>(wins_a) / games : 0.0; }
  double wilson_lower() const { return WilsonLower(wins_a, games); }
  double wilson_upper() const { return WilsonUpper(wins_a, games); }
  double points_per_round(int side) const;
  double nil_frequency(int side) const;  // nil bids per seat-round
  double nil_success(int side) const;
  double mean_sum_bids() const;
  double mean_legal_count() const;
  // Rank correlation between the first three bids' sum and the dealer's
  // ace-of-spades rate, over buckets with at least `min_count` rounds.
  double fourth_seat_ace_correlation(std::int64_t min_count = 100) const;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

nlohmann::json ToJson(const MatchStats& stats);

struct LineError {
  std::int64_t line = 0;  // 1-based
  std::string message;
};

// Reads a JSONL stream of round logs. Corrupt or non-replaying lines are
// reported and skipped.
MatchStats StatsFromJsonl(std::istream& in, std::vector<LineError>* errors = nullptr);

}  // namespace spades::harness
