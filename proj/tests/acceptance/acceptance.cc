// Acceptance checks. Each criterion prints one PASS/FAIL line; the process
// exits non-zero when any selected criterion fails.
//
//   spades_acceptance <criterion>...   run the named criteria
//   spades_acceptance all              run every criterion
//   spades_acceptance list             print the names

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "endgame_oracle.h"
#include "oracles.h"
#include "spades/bis/hand_eval.h"
#include "spades/engine/game.h"
#include "spades/engine/round.h"
#include "spades/engine/rng.h"
#include "spades/harness/agents.h"
#include "spades/harness/match.h"
#include "spades/players/uct.h"
#include "spades/sc/training.h"
#include "spades/tables/cnil_table.h"
#include "spades/tables/cut_table.h"
#include "test_agents.h"

namespace {

using namespace spades;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [X]");
  }
};

std::string Fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string DataPath(const std::string& name) { return std::string(SPADES_SOURCE_DIR) + "/data/" + name; }

nlohmann::json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(in);
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

harness::AgentResources TrainedResources() {
  harness::AgentResources res;
  res.curves = std::make_shared<const sc::SCTable>(sc::LoadSCTable(DataPath("sc.json")));
  res.single_curve = std::make_shared<const sc::SCTable>(sc::LoadSCTable(DataPath("sc_single.json")));
  return res;
}

// ---------------------------------------------------------------------------

constexpr double kTableTol = 0.005;

void TablesExact(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (int opp : {1, 2, 3}) {
    const tables::CutTable exact = tables::BuildCutTable(opp);
    const tables::CutTable reference =
        tables::CutTableFromJson(ReadJson(DataPath("reference_tables/cut_" + std::to_string(opp) + "_opponents.json")));
    const auto diffs = tables::DiffCutTables(exact, reference, kTableTol);
    std::ostringstream cells;
    for (const auto& d : diffs) cells << " (" << d.m << ",>" << d.k << ")=" << Fmt(d.a, 3) << " vs " << d.b;
    o.Check(diffs.empty(), std::to_string(opp) + " opp: " + std::to_string(reference.rows() * 3 - diffs.size()) +
                               "/" + std::to_string(reference.rows() * 3) + " cells within " + Fmt(kTableTol, 3) +
                               cells.str());
  }
  const auto& t2 = tables::StandardCutTable(2);
  o.Check(std::abs(t2.entry(5, 1) - 0.678) <= kTableTol, "2 opp (5,>1)=" + Fmt(t2.entry(5, 1)));
  o.Check(std::abs(t2.entry(3, 2) - 0.489) <= kTableTol, "2 opp (3,>2)=" + Fmt(t2.entry(3, 2)));
  o.Check(std::abs(t2.entry(8, 1) - 0.214) <= kTableTol, "2 opp (8,>1)=" + Fmt(t2.entry(8, 1)));
  const double t1 = tables::StandardCutTable(1).entry(3, 2);
  o.Check(std::abs(t1 - 0.733) <= kTableTol, "1 opp (3,>2)=" + Fmt(t1));
  const double t3 = tables::StandardCutTable(3).entry(4, 1);
  o.Check(std::abs(t3 - 0.672) <= kTableTol, "3 opp (4,>1)=" + Fmt(t3));
  const double secs = Seconds(start);
  o.Check(secs < 60, "runtime " + Fmt(secs, 2) + " s < 60 s");
}

constexpr int kMcSamples = 100000;
constexpr double kSigmas = 3.0;

void TablesMonteCarlo(Outcome& o) {
  for (int opp : {1, 2, 3}) {
    const tables::CutTable exact = tables::BuildCutTable(opp);
    const tables::CutTable mc = tables::BuildCutTable(opp, {tables::Mode::kMonteCarlo, kMcSamples, 20240});
    int bad = 0;
    double worst = 0;
    for (int m = 0; m < exact.rows(); ++m) {
      for (int k = 0; k < tables::kCutColumns; ++k) {
        const double se = mc.std_errors[m][k];
        const double dev = std::abs(mc.entry(m, k) - exact.entry(m, k));
        const bool ok = se > 0 ? dev <= kSigmas * se : dev == 0.0;
        if (!ok) ++bad;
        if (se > 0) worst = std::max(worst, dev / se);
      }
    }
    o.Check(bad == 0, std::to_string(opp) + " opp: " + std::to_string(bad) + " cells beyond 3 sigma (max " +
                          Fmt(worst, 2) + " sigma)");
  }
}

std::uint16_t Mask(std::initializer_list<int> ranks) {
  std::uint16_t m = 0;
  for (int r : ranks) m |= static_cast<std::uint16_t>(1U << r);
  return m;
}

constexpr int kSmallSuit = 8;
constexpr int kOracleHoldings = 20;

void CNil(Outcome& o) {
  using tables::SuitKind;
  const double q = tables::CNilExact(SuitKind::kSide, Mask({rank::kQueen})).ToDouble();
  o.Check(std::abs(q - 0.578) <= 0.01, "singleton Q " + Fmt(q));
  const double qa = tables::CNilExact(SuitKind::kSide, Mask({rank::kQueen, rank::kAce})).ToDouble();
  o.Check(qa < 0.002, "{Q,A} hearts " + Fmt(qa, 5) + " < 0.002");

  bool ace_zero = true;
  for (int other = 0; other < (1 << rank::kAce); ++other) {
    const auto mask = static_cast<std::uint16_t>(other | (1 << rank::kAce));
    ace_zero &= tables::CNilExact(SuitKind::kSpades, mask).ToDouble() == 0.0;
  }
  o.Check(ace_zero, "spades with AS exactly 0");
  bool four_zero = true;
  for (int bits = 0; bits < (1 << 13); ++bits) {
    if (std::popcount(static_cast<unsigned>(bits)) < 4) continue;
    four_zero &= tables::CNilExact(SuitKind::kSpades, static_cast<std::uint16_t>(bits)).ToDouble() == 0.0;
  }
  o.Check(four_zero, "spades length >= 4 exactly 0");

  // Small universe: brute force over card assignments vs the Monte-Carlo estimator.
  Rng rng(77);
  tables::DealSampler sampler(78);
  int agree = 0;
  double worst = 0;
  for (int i = 0; i < kOracleHoldings; ++i) {
    const bool spades = rng.Below(2) == 1;
    const int len = 1 + static_cast<int>(rng.Below(spades ? 3 : 4));
    std::vector<int> ranks(kSmallSuit);
    std::iota(ranks.begin(), ranks.end(), 0);
    rng.Shuffle(ranks.begin(), ranks.end());
    ranks.resize(static_cast<std::size_t>(len));
    std::sort(ranks.begin(), ranks.end());
    std::uint16_t mask = 0;
    for (int r : ranks) mask |= static_cast<std::uint16_t>(1U << r);
    const double truth = testing::BruteForceCNil(spades, ranks, kSmallSuit);
    const tables::Estimate e = tables::CNilMonteCarlo(spades ? SuitKind::kSpades : SuitKind::kSide, mask,
                                                      kMcSamples, sampler, kSmallSuit);
    const double dev = std::abs(e.p - truth);
    const bool ok = e.std_error > 0 ? dev <= kSigmas * e.std_error : dev == 0.0;
    agree += ok ? 1 : 0;
    if (e.std_error > 0) worst = std::max(worst, dev / e.std_error);
  }
  o.Check(agree == kOracleHoldings, "8-card oracle vs MC: " + std::to_string(agree) + "/" +
                                        std::to_string(kOracleHoldings) + " within 3 sigma (max " +
                                        Fmt(worst, 2) + " sigma)");
}

std::array<Bid, 4> Regular(int n, int e, int s, int w) {
  return {Bid::Regular(n), Bid::Regular(e), Bid::Regular(s), Bid::Regular(w)};
}

void Scoring(Outcome& o) {
  const RoundScore set = ScoreRound(Regular(4, 3, 2, 3), {3, 4, 2, 4}, {0, 0});
  o.Check(set.of(Partnership::kNorthSouth).points_delta == -60,
          "set 6 -> " + std::to_string(set.of(Partnership::kNorthSouth).points_delta));
  const RoundScore over = ScoreRound(Regular(4, 2, 2, 2), {5, 2, 4, 2}, {0, 0});
  o.Check(over.of(Partnership::kNorthSouth).points_delta == 63,
          "6 bid, 9 taken -> " + std::to_string(over.of(Partnership::kNorthSouth).points_delta));
  GameScore before;
  before.points = {288, 0};
  before.bags = {8, 0};
  const RoundScore bagged = ScoreRound(Regular(4, 2, 2, 2), {5, 2, 4, 2}, before.bags);
  const GameScore after = ApplyRoundScore(before, bagged);
  o.Check(after.points[0] == 241, "running total " + std::to_string(after.points[0]));
  o.Check(bagged.of(Partnership::kNorthSouth).bag_penalty == -100 && after.bags[0] == 1,
          "bag-back " + std::to_string(bagged.of(Partnership::kNorthSouth).bag_penalty) + ", bags reset to " +
              std::to_string(after.bags[0]));

  std::array<Bid, 4> bids = Regular(0, 3, 4, 3);
  bids[0] = Bid::Nil();
  const int nil_made = ScoreRound(bids, {0, 3, 6, 4}, {0, 0}).side[0].nil_points[0];
  const int nil_set = ScoreRound(bids, {1, 3, 5, 4}, {0, 0}).side[0].nil_points[0];
  o.Check(nil_made == 100 && nil_set == -100,
          "nil " + std::to_string(nil_made) + "/" + std::to_string(nil_set));
  bids[0] = Bid::BlindNil();
  const int blind_made = ScoreRound(bids, {0, 3, 6, 4}, {0, 0}).side[0].nil_points[0];
  const int blind_set = ScoreRound(bids, {2, 3, 4, 4}, {0, 0}).side[0].nil_points[0];
  o.Check(blind_made == 200 && blind_set == -200,
          "blind nil " + std::to_string(blind_made) + "/" + std::to_string(blind_set));
}

void SampleHand(Outcome& o) {
  const CardSet hand = CardSet::FromCodes("KC 9C 5C 4C 3C QD AH QH AS KS JS 6S 2S");
  const bis::RegularEvaluation e = bis::EvaluateRegular(hand, {});
  o.Check(std::abs(e.raw - 5.89) <= 0.01, "raw " + Fmt(e.raw, 3) + " (5.89 +- 0.01)");
  o.Check(std::abs(e.side_high_cards - (0.678 + 0.99)) <= 0.01, "side highs " + Fmt(e.side_high_cards, 3));
  o.Check(e.spade_sure == 2.0, "sure spades " + Fmt(e.spade_sure, 2));
  o.Check(std::abs(e.spade_high_long - 2.0) <= 0.01 && std::abs(e.spade_cuts - 2.3) <= 0.01,
          "max{" + Fmt(e.spade_high_long, 2) + ", " + Fmt(e.spade_cuts, 2) + "}");
  const double nv = bis::NilValue(hand);
  o.Check(nv == 0.0, "nilValue " + Fmt(nv, 6));
}

constexpr double kGradRelTol = 1e-6;

void SuccessCurves(Outcome& o) {
  sc::DatasetConfig dc;
  dc.rounds = 200000;
  dc.explore_rate = 0.1;
  dc.seed = 1;
  const auto data = sc::GenerateDataset(dc);
  o.detail << data.size() << " nil examples from " << dc.rounds << " self-play rounds";

  // Finite differences at two points away from the optimum.
  double worst = 0;
  for (std::uint64_t seed : {1, 2}) {
    sc::SCModel m;
    Rng rng(seed);
    for (double& w : m.weights) w = rng.Uniform() * 2 - 1;
    const sc::FeatureVector g = sc::Gradient(m, data, 1e-4);
    for (int f = 0; f < sc::kNumFeatures; ++f) {
      const double h = 1e-5;
      sc::SCModel up = m, down = m;
      up.weights[f] += h;
      down.weights[f] -= h;
      const double fd = (sc::Objective(up, data, 1e-4) - sc::Objective(down, data, 1e-4)) / (2 * h);
      worst = std::max(worst, std::abs(fd - g[f]) / std::max(std::abs(g[f]), 1e-12));
    }
  }
  o.Check(worst <= kGradRelTol, "gradient vs finite differences rel " + Fmt(worst * 1e6, 3) + "e-6");

  const sc::SCModel model = sc::Train(data, sc::TrainConfig{});
  const sc::SCTable table = sc::BuildTable(model);
  bool monotone = true;
  for (int i = 0; i < sc::kNumSequences; ++i) {
    const sc::Curve& c = table.curve(i);
    for (int g = 1; g < sc::kGridPoints; ++g) monotone &= c[g] >= c[g - 1];
  }
  o.Check(monotone, "all 2955 curves monotone");

  int ordered = 0;
  for (int g = 0; g < sc::kGridPoints; ++g) {
    const double v = g / 100.0;
    const double p8 = table.Lookup(std::vector<int>{8, 3}, v);
    const double p3 = table.Lookup(std::vector<int>{3, 3}, v);
    const double p1 = table.Lookup(std::vector<int>{1, 3}, v);
    ordered += (p8 >= p3 && p3 >= p1) ? 1 : 0;
  }
  o.Check(ordered == sc::kGridPoints,
          "partner 8 >= 3 >= 1 (RHO 3) at " + std::to_string(ordered) + "/101 grid points");
  const double star = table.Lookup(std::vector<int>{1, 3}, 0.8);
  o.Check(star >= 0.5 && star <= 0.8, "SC((1,3), 0.8) = " + Fmt(star, 3) + " in [0.5, 0.8]");
}

harness::MatchConfig TenK(const std::string& a, const std::string& b) {
  harness::MatchConfig c;
  c.a_bidder = a;
  c.b_bidder = b;
  c.games = 10000;
  c.seed = 2024;
  return c;
}

std::string Summary(const harness::MatchStats& s) {
  return Fmt(s.win_rate_a()) + " [" + Fmt(s.wilson_lower()) + ", " + Fmt(s.wilson_upper()) + "]";
}

void HeadToHead(Outcome& o) {
  const auto res = TrainedResources();
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [opp, bound] : std::vector<std::pair<std::string, double>>{{"rb", 0.50}, {"ms", 0.55}, {"io", 0.55}}) {
    const auto s = harness::RunMatch(TenK("bis", opp), res);
    o.Check(s.wilson_lower() > bound, "BIS vs " + opp + " " + Summary(s) + " lower > " + Fmt(bound, 2));
  }
  o.detail << "; " << Fmt(Seconds(start), 1) << " s";
}

void Ablations(Outcome& o) {
  const auto res = TrainedResources();
  harness::MatchConfig base = TenK("bis", "bis");
  const auto single = harness::RunMatch(harness::AblationConfig(base, harness::Ablation::kSingleCurve), res);
  o.Check(single.wilson_lower() > 0.50, "vs single-curve " + Summary(single));
  const auto no_end = harness::RunMatch(harness::AblationConfig(base, harness::Ablation::kNoEndgame), res);
  o.Check(no_end.wilson_lower() > 0.50, "vs no-endgame goal 200 " + Summary(no_end));
  base.goals.win = 1;
  const auto no_end1 = harness::RunMatch(harness::AblationConfig(base, harness::Ablation::kNoEndgame), res);
  o.Check(no_end1.wilson_lower() > 0.50, "vs no-endgame goal 1 " + Summary(no_end1));
  const double full = no_end.points_per_round(0);
  const double ablated = no_end.points_per_round(1);
  o.Check(full < ablated, "points/round full " + Fmt(full, 2) + " < no-endgame " + Fmt(ablated, 2));
}

constexpr std::int64_t kDistRounds = 100000;

bool Bimodal(const std::map<int, std::int64_t>& hist, std::string* why) {
  std::int64_t neg = 0, pos = 0;
  int neg_at = 0, pos_at = 0;
  for (const auto& [b, n] : hist) {
    if (b < 0 && n > neg) neg = n, neg_at = b;
    if (b > 0 && n > pos) pos = n, pos_at = b;
  }
  std::int64_t valley = std::numeric_limits<std::int64_t>::max();
  for (int b = neg_at; b <= pos_at; b += harness::kPointsBucket) {
    auto it = hist.find(b);
    valley = std::min(valley, it == hist.end() ? 0 : it->second);
  }
  *why = "modes " + std::to_string(neg_at) + " (" + std::to_string(neg) + ") and " + std::to_string(pos_at) +
         " (" + std::to_string(pos) + "), valley " + std::to_string(valley);
  return neg > 0 && pos > 0 && 2 * valley < std::min(neg, pos);
}

void Distributional(Outcome& o) {
  const auto res = TrainedResources();
  harness::MatchConfig c = TenK("bis", "bis");
  c.games = 40000;
  const auto s = harness::RunMatch(c, res);
  o.Check(s.rounds >= kDistRounds, std::to_string(s.rounds) + " rounds");
  const double sum = s.mean_sum_bids();
  o.Check(sum >= 9.5 && sum <= 11.5, "mean sum of bids " + Fmt(sum, 3) + " in [9.5, 11.5]");
  const double legal = s.mean_legal_count();
  o.Check(legal >= 3.0 && legal <= 4.2, "mean legal plays " + Fmt(legal, 3) + " in [3.0, 4.2]");
  const double rho = s.fourth_seat_ace_correlation();
  o.Check(rho < 0, "4th-seat AS vs first-3 sum Spearman " + Fmt(rho, 3) + " < 0");
  std::string why;
  const bool bimodal = Bimodal(s.nil_round_points, &why);
  o.Check(bimodal, "nil-round points bimodal: " + why);
}

constexpr int kEngineRounds = 10000;

void EngineProperties(Outcome& o) {
  int conserved = 0, legal = 0, replayed = 0, determined = 0;
  for (int r = 0; r < kEngineRounds; ++r) {
    const std::uint64_t seed = DeriveSeed(99, static_cast<std::uint64_t>(r));
    Rng bidrng(seed);
    std::array<std::unique_ptr<Agent>, kNumSeats> owned;
    std::array<Agent*, kNumSeats> agents{};
    for (Seat s : kAllSeats) {
      const int v = static_cast<int>(bidrng.Below(kMaxBid + 1));
      owned[Index(s)] = testing::MakeUniformAgent(Bid::Regular(v));
      agents[Index(s)] = owned[Index(s)].get();
    }
    RoundSetup setup;
    setup.seed = seed;
    setup.dealer = SeatAt(r);
    setup.score.bags = {static_cast<int>(bidrng.Below(10)), static_cast<int>(bidrng.Below(10))};
    RoundLog log;
    try {
      log = PlayRound(agents, setup);
      ++legal;  // PlayRound rejects any illegal card
    } catch (const RuleViolation&) {
      continue;
    }

    CardSet seen;
    bool ok = log.tricks.size() == kTricksPerRound;
    int tricks = 0;
    for (const Trick& t : log.tricks) {
      ok &= t.size == kNumSeats;
      for (int i = 0; i < t.size; ++i) {
        ok &= log.hands[Index(t.SeatOf(i))].contains(t.cards[i]) && !seen.contains(t.cards[i]);
        seen.insert(t.cards[i]);
      }
    }
    for (int n : log.TricksBySeat()) tricks += n;
    ok &= tricks == kTricksPerRound && seen == CardSet::FullDeck();
    ok &= log.score.side[0].tricks + log.score.side[1].tricks == kTricksPerRound;
    conserved += ok ? 1 : 0;

    try {
      const std::string text = ToJson(log).dump();
      const RoundLog back = RoundLogFromJson(nlohmann::json::parse(text));
      const bool same = ToJson(back).dump() == text;
      ReplayRound(back);
      replayed += same ? 1 : 0;
    } catch (const std::exception&) {
    }

    const auto a = Deal(seed);
    const auto b = Deal(seed);
    CardSet all;
    bool sizes = true;
    for (const CardSet& h : a) {
      all |= h;
      sizes &= h.size() == 13;
    }
    determined += (a == b && a == log.hands && sizes && all == CardSet::FullDeck()) ? 1 : 0;
  }
  const std::string n = "/" + std::to_string(kEngineRounds);
  o.Check(legal == kEngineRounds, "legality " + std::to_string(legal) + n);
  o.Check(conserved == kEngineRounds, "trick conservation " + std::to_string(conserved) + n);
  o.Check(replayed == kEngineRounds, "log replay bit-equal " + std::to_string(replayed) + n);
  o.Check(determined == kEngineRounds, "deal determinism " + std::to_string(determined) + n);
}

constexpr int kEndgames = 200;
constexpr double kUctVsRandom = 0.90;

void UctSanity(Outcome& o) {
  // Forced move: a single legal card returns without search.
  int forced = 0, forced_total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RoundState state = testing::AdvanceTo(seed, 1);
    const Seat s = state.ToAct();
    players::UctOptions opt;
    opt.iterations = 100000;
    players::UctPlayer p(opt);
    p.BeginRound(seed, s);
    const auto t0 = std::chrono::steady_clock::now();
    const Card c = p.ChooseCard(state, s, state.LegalPlays(s));
    ++forced_total;
    forced += (c == *state.hand(s).begin() && p.last_stats().iterations == 0 && Seconds(t0) < 0.01) ? 1 : 0;
  }
  o.Check(forced == forced_total, "forced move immediate " + std::to_string(forced) + "/" + std::to_string(forced_total));

  int matched = 0, compared = 0;
  for (std::uint64_t seed = 0; compared < kEndgames; ++seed) {
    RoundState state = testing::AdvanceTo(1000 + seed, 2);
    for (int k = 0; k < static_cast<int>(seed % 3); ++k) {
      const Seat s = state.ToAct();
      state.ApplyCard(s, players::SrpChooseCard(state, s, state.LegalPlays(s), {}));
    }
    const Seat me = state.ToAct();
    const CardSet legal = state.LegalPlays(me);
    if (legal.size() < 2) continue;
    const auto oracle = testing::EndgameOracle(state, me);
    double best = -1e18;
    for (const auto& [k, v] : oracle) best = std::max(best, v);
    players::UctOptions opt;
    opt.iterations = 5000;
    Rng rng(seed);
    const Card pick = players::UctChooseCard(state, me, legal, opt, rng);
    ++compared;
    matched += std::abs(oracle.at(pick.index()) - best) < 1e-9 ? 1 : 0;
  }
  o.Check(matched == compared, "endgames matching the exhaustive oracle " + std::to_string(matched) + "/" +
                                   std::to_string(compared));

  harness::MatchConfig c;
  c.a_bidder = "bis";
  c.a_player = "uct:3";
  c.b_bidder = "bis";
  c.b_player = "random";
  c.games = 500;
  c.seed = 31;
  const auto s = harness::RunMatch(c, TrainedResources());
  o.Check(s.win_rate_a() >= kUctVsRandom, "UCT(3)+SRP vs random " + Fmt(s.win_rate_a(), 3) + " >= 0.90");
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>& Criteria() {
  static const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> all{
      {"tables-exact", TablesExact},
      {"tables-mc", TablesMonteCarlo},
      {"cnil", CNil},
      {"scoring", Scoring},
      {"sample-hand", SampleHand},
      {"success-curves", SuccessCurves},
      {"head-to-head", HeadToHead},
      {"ablations", Ablations},
      {"distributional", Distributional},
      {"engine-properties", EngineProperties},
      {"uct-sanity", UctSanity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names(argv + 1, argv + argc);
  if (names.empty() || names == std::vector<std::string>{"list"}) {
    for (const auto& [name, fn] : Criteria()) std::cout << name << '\n';
    return names.empty() ? 2 : 0;
  }
  if (names == std::vector<std::string>{"all"}) {
    names.clear();
    for (const auto& [name, fn] : Criteria()) names.push_back(name);
  }
  int failed = 0;
  for (const std::string& name : names) {
    auto it = std::find_if(Criteria().begin(), Criteria().end(), [&](const auto& c) { return c.first == name; });
    if (it == Criteria().end()) {
      std::cerr << "unknown criterion " << name << '\n';
      return 2;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      it->second(o);
    } catch (const std::exception& e) {
      o.Check(false, std::string("error: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << Fmt(Seconds(start), 1) << " s): " << o.detail.str()
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
