#include "spades/harness/stats.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>

#include "spades/engine/scoring.h"

namespace spades::harness {
namespace {

int Bucket(int points) {
  return static_cast<int>(std::floor(static_cast<double>(points) / kPointsBucket)) * kPointsBucket;
}

std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

template <typename K, typename V>
nlohmann::json MapJson(const std::map<K, V>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

double WilsonLower(std::int64_t wins, std::int64_t n, double z) {
  if (n <= 0) return 0.0;
  const double p = static_cast<double>(wins) / n;
  const double z2 = z * z;
  const double center = p + z2 / (2.0 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4.0 * n * n));
  return (center - spread) / (1 + z2 / n);
}

double WilsonUpper(std::int64_t wins, std::int64_t n, double z) {
  if (n <= 0) return 1.0;
  const double p = static_cast<double>(wins) / n;
  const double z2 = z * z;
  const double center = p + z2 / (2.0 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4.0 * n * n));
  return (center + spread) / (1 + z2 / n);
}

double SpearmanCorrelation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return 0.0;
  const auto rx = Ranks(x);
  const auto ry = Ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

void MatchStats::Add(const RoundLog& log) {
  const std::vector<int> legal = ReplayRound(log);
  for (int c : legal) ++legal_counts[c];

  const auto bids = log.BidsBySeat();
  const auto tricks = log.TricksBySeat();
  const Partnership a = log.side_a;
  ++rounds;

  int total_bid = 0;
  for (const SeatBid& sb : log.bids) total_bid += sb.bid.value;
  ++sum_bids[total_bid];
  points_by_sum_bids[total_bid] +=
      log.score.side[0].points_delta + log.score.side[1].points_delta;

  for (int side = 0; side < 2; ++side) {
    const Partnership p = side == 0 ? a : Other(a);
    const int delta = log.score.of(p).points_delta;
    points[side] += delta;
    bool any_nil = false;
    for (Seat s : kAllSeats) {
      if (PartnershipOf(s) != p || !bids[Index(s)].is_nil()) continue;
      any_nil = true;
      ++nil_bids[side];
      if (bids[Index(s)].blind) ++blind_nils[side];
      if (tricks[Index(s)] == 0) ++nil_made[side];
    }
    ++(any_nil ? nil_round_points : regular_round_points)[Bucket(delta)];
  }

  const SeatBid& last = log.bids.back();
  const int first_three = total_bid - last.bid.value;
  auto& ace = fourth_seat_ace[first_three];
  ace[0] += log.hands[Index(last.seat)].contains(Card(Suit::kSpades, rank::kAce)) ? 1 : 0;
  ace[1] += 1;

  const Seat viewer = a == Partnership::kNorthSouth ? Seat::kNorth : Seat::kEast;
  const auto type = static_cast<int>(players::ClassifyRound(bids, viewer));
  ++round_types[type];
  round_type_points_a[type] += log.score.of(a).points_delta;

  if (log.winner) {
    ++games;
    if (*log.winner == a) ++wins_a;
  }
}

void MatchStats::Merge(const MatchStats& o) {
  games += o.games;
  wins_a += o.wins_a;
  rounds += o.rounds;
  for (int s = 0; s < 2; ++s) {
    points[s] += o.points[s];
    nil_bids[s] += o.nil_bids[s];
    nil_made[s] += o.nil_made[s];
    blind_nils[s] += o.blind_nils[s];
  }
  for (const auto& [k, v] : o.nil_round_points) nil_round_points[k] += v;
  for (const auto& [k, v] : o.regular_round_points) regular_round_points[k] += v;
  for (const auto& [k, v] : o.sum_bids) sum_bids[k] += v;
  for (const auto& [k, v] : o.points_by_sum_bids) points_by_sum_bids[k] += v;
  for (const auto& [k, v] : o.legal_counts) legal_counts[k] += v;
  for (const auto& [k, v] : o.fourth_seat_ace) {
    fourth_seat_ace[k][0] += v[0];
    fourth_seat_ace[k][1] += v[1];
  }
  for (int t = 0; t < players::kNumRoundTypes; ++t) {
    round_types[t] += o.round_types[t];
    round_type_points_a[t] += o.round_type_points_a[t];
  }
}

double MatchStats::points_per_round(int side) const {
  return rounds ? static_cast<double>(points[side]) / rounds : 0.0;
}

double MatchStats::nil_frequency(int side) const {
  return rounds ? static_cast<double>(nil_bids[side]) / (2.0 * rounds) : 0.0;
}

double MatchStats::nil_success(int side) const {
  return nil_bids[side] ? static_cast<double>(nil_made[side]) / nil_bids[side] : 0.0;
}

double MatchStats::mean_sum_bids() const {
  std::int64_t n = 0, total = 0;
  for (const auto& [k, v] : sum_bids) {
    n += v;
    total += k * v;
  }
  return n ? static_cast<double>(total) / n : 0.0;
}

double MatchStats::mean_legal_count() const {
  std::int64_t n = 0, total = 0;
  for (const auto& [k, v] : legal_counts) {
    n += v;
    total += k * v;
  }
  return n ? static_cast<double>(total) / n : 0.0;
}

double MatchStats::fourth_seat_ace_correlation(std::int64_t min_count) const {
  std::vector<double> x, y;
  for (const auto& [sum, counts] : fourth_seat_ace) {
    if (counts[1] < min_count) continue;
    x.push_back(sum);
    y.push_back(static_cast<double>(counts[0]) / counts[1]);
  }
  return SpearmanCorrelation(x, y);
}

nlohmann::json ToJson(const MatchStats& s) {
  using nlohmann::json;
  json j;
  j["games"] = s.games;
  j["wins_a"] = s.wins_a;
  j["win_rate_a"] = s.win_rate_a();
  j["wilson_lower"] = s.wilson_lower();
  j["wilson_upper"] = s.wilson_upper();
  j["rounds"] = s.rounds;
  for (int side = 0; side < 2; ++side) {
    const std::string key = side == 0 ? "a" : "b";
    j[key] = {{"points", s.points[side]},
              {"points_per_round", s.points_per_round(side)},
              {"nil_bids", s.nil_bids[side]},
              {"nil_made", s.nil_made[side]},
              {"blind_nils", s.blind_nils[side]},
              {"nil_frequency", s.nil_frequency(side)},
              {"nil_success", s.nil_success(side)}};
  }
  j["nil_round_points"] = MapJson(s.nil_round_points);
  j["regular_round_points"] = MapJson(s.regular_round_points);
  j["sum_bids"] = MapJson(s.sum_bids);
  j["mean_sum_bids"] = s.mean_sum_bids();
  json by_sum = json::object();
  for (const auto& [k, v] : s.points_by_sum_bids) {
    by_sum[std::to_string(k)] = static_cast<double>(v) / (2.0 * s.sum_bids.at(k));
  }
  j["mean_points_by_sum_bids"] = by_sum;
  j["legal_counts"] = MapJson(s.legal_counts);
  j["mean_legal_count"] = s.mean_legal_count();
  json ace = json::object();
  for (const auto& [k, v] : s.fourth_seat_ace) {
    ace[std::to_string(k)] = {{"holding", v[0]}, {"rounds", v[1]}};
  }
  j["fourth_seat_ace"] = ace;
  j["fourth_seat_ace_correlation"] = s.fourth_seat_ace_correlation();
  json types = json::object();
  for (int t = 0; t < players::kNumRoundTypes; ++t) {
    const auto name = players::RoundTypeName(static_cast<players::RoundType>(t));
    types[name] = {{"rounds", s.round_types[t]}, {"points_a", s.round_type_points_a[t]}};
  }
  j["round_types"] = types;
  return j;
}

MatchStats StatsFromJsonl(std::istream& in, std::vector<LineError>* errors) {
  MatchStats stats;
  std::string line;
  std::int64_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      stats.Add(RoundLogFromJson(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      if (errors) errors->push_back({n, e.what()});
    }
  }
  return stats;
}

}  // namespace spades::harness
