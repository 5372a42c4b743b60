#include <gtest/gtest.h>

#include <sstream>

#include "spades/harness/agents.h"
#include "spades/harness/match.h"
#include "spades/harness/stats.h"

namespace spades::harness {
namespace {

// Reference values from statsmodels proportion_confint(method="wilson",
// alpha=0.10) and scipy.stats.spearmanr.
TEST(Stats, WilsonBounds) {
  EXPECT_NEAR(WilsonLower(50, 100), 0.418848, 1e-4);
  EXPECT_NEAR(WilsonUpper(50, 100), 0.581152, 1e-4);
  EXPECT_NEAR(WilsonLower(5230, 10000), 0.514779, 1e-4);
  EXPECT_NEAR(WilsonUpper(5230, 10000), 0.531208, 1e-4);
  EXPECT_EQ(WilsonLower(0, 10), 0.0);
  EXPECT_NEAR(WilsonUpper(10, 10), 1.0, 1e-12);
}

TEST(Stats, SpearmanWithTies) {
  EXPECT_NEAR(SpearmanCorrelation({1, 2, 2, 3}, {1, 2, 3, 4}), 0.948683, 1e-6);
  EXPECT_NEAR(SpearmanCorrelation({3, 1, 4, 1, 5}, {9, 2, 6, 5, 3}), 0.205196, 1e-6);
  EXPECT_NEAR(SpearmanCorrelation({1, 2, 3}, {30, 20, 10}), -1.0, 1e-12);
}

MatchConfig Small(int games) {
  MatchConfig c;
  c.games = games;
  c.seed = 13;
  c.threads = 1;
  return c;
}

TEST(Match, SeatSwapPairsShareDeals) {
  const MatchConfig c = Small(4);
  EXPECT_EQ(GameSeed(c, 0), GameSeed(c, 1));
  EXPECT_NE(GameSeed(c, 1), GameSeed(c, 2));
  EXPECT_EQ(SideAIn(c, 0), Partnership::kNorthSouth);
  EXPECT_EQ(SideAIn(c, 1), Partnership::kEastWest);

  const GameResult a = PlayMatchGame(c, AgentResources{}, 0);
  const GameResult b = PlayMatchGame(c, AgentResources{}, 1);
  EXPECT_EQ(a.rounds.front().hands, b.rounds.front().hands);
}

TEST(Match, DeterministicAcrossThreadCounts) {
  MatchConfig c = Small(24);
  std::vector<std::string> one, three;
  const MatchStats s1 = RunMatch(c, AgentResources{}, [&](const RoundLog& l) {
    one.push_back(ToJson(l).dump());
  });
  c.threads = 3;
  const MatchStats s3 = RunMatch(c, AgentResources{}, [&](const RoundLog& l) {
    three.push_back(ToJson(l).dump());
  });
  EXPECT_EQ(s1, s3);
  EXPECT_EQ(one, three);
  EXPECT_EQ(s1.games, 24);
}

TEST(Match, StatsFromLogsEqualOnlineStats) {
  std::stringstream logs;
  const MatchStats online = RunMatch(Small(20), AgentResources{}, [&](const RoundLog& l) {
    logs << ToJson(l).dump() << '\n';
  });
  std::vector<LineError> errors;
  const MatchStats offline = StatsFromJsonl(logs, &errors);
  EXPECT_TRUE(errors.empty());
  EXPECT_EQ(offline, online);
  EXPECT_EQ(ToJson(offline), ToJson(online));
}

TEST(Match, CorruptLinesAreReported) {
  std::vector<std::string> lines;
  RunMatch(Small(2), AgentResources{}, [&](const RoundLog& l) { lines.push_back(ToJson(l).dump()); });
  ASSERT_GE(lines.size(), 2u);
  nlohmann::json tampered = nlohmann::json::parse(lines[1]);
  tampered["scores"]["NS"] = tampered["scores"]["NS"].get<int>() + 10;
  tampered["totals"]["NS"] = tampered["totals"]["NS"].get<int>() + 10;

  std::stringstream in;
  in << lines[0] << "\n{broken\n" << tampered.dump() << "\n";
  std::vector<LineError> errors;
  const MatchStats got = StatsFromJsonl(in, &errors);
  ASSERT_EQ(errors.size(), 2u);
  EXPECT_EQ(errors[0].line, 2);
  EXPECT_EQ(errors[1].line, 3);
  EXPECT_EQ(got.rounds, 1);
}

TEST(Match, GoalOneEndsGamesAtTheFirstCrossing) {
  MatchConfig c = Small(40);
  c.goals.win = 1;
  std::map<std::int64_t, std::vector<RoundLog>> games;
  const MatchStats s = RunMatch(c, AgentResources{}, [&](const RoundLog& l) { games[l.game].push_back(l); });
  EXPECT_EQ(s.games, 40);
  for (const auto& [g, rounds] : games) {
    for (std::size_t r = 0; r + 1 < rounds.size(); ++r) {
      EXPECT_FALSE(rounds[r].winner);
      EXPECT_LT(std::max(rounds[r].score_after.points[0], rounds[r].score_after.points[1]), 1);
    }
    EXPECT_TRUE(rounds.back().winner);
  }
  EXPECT_LT(static_cast<double>(s.rounds) / s.games, 1.5);
}

TEST(Match, MirrorMatchIsExactlyEven) {
  // Deterministic agents on swapped deals produce mirrored results.
  MatchConfig c = Small(30);
  c.b_bidder = "bis";
  const MatchStats s = RunMatch(c, AgentResources{});
  EXPECT_EQ(2 * s.wins_a, s.games);
  EXPECT_EQ(s.points[0], s.points[1]);
}

TEST(Match, UnknownAgentNamesThrow) {
  MatchConfig c = Small(2);
  c.b_bidder = "oracle";
  EXPECT_THROW(RunMatch(c, AgentResources{}), std::invalid_argument);
  EXPECT_THROW(MakePlayer("uct:0", AgentResources{}), std::invalid_argument);
  EXPECT_THROW(MakePlayer("uct:14", AgentResources{}), std::invalid_argument);
  EXPECT_THROW(MakePlayer("uct:x", AgentResources{}), std::invalid_argument);
  EXPECT_EQ(MakePlayer("uct:3", AgentResources{})->name(), "uct:3");
}

TEST(Match, AblationPairsFullBisWithOneComponentOff) {
  MatchConfig base = Small(2);
  base.a_player = "wrp";
  const MatchConfig c = AblationConfig(base, Ablation::kNoEndgame);
  EXPECT_EQ(c.a_bidder, "bis");
  EXPECT_EQ(c.b_bidder, "bis-no-endgame");
  EXPECT_EQ(c.b_player, "wrp");
  EXPECT_EQ(AblationFromName("single-curve"), Ablation::kSingleCurve);
  EXPECT_THROW(AblationFromName("nothing"), std::invalid_argument);
}

TEST(Stats, NilAndRoundTypeCountsAreConsistent) {
  const MatchStats s = RunMatch(Small(20), AgentResources{});
  std::int64_t typed = 0;
  for (auto n : s.round_types) typed += n;
  EXPECT_EQ(typed, s.rounds);
  for (int side = 0; side < 2; ++side) EXPECT_LE(s.nil_made[side], s.nil_bids[side]);
  std::int64_t legal = 0;
  for (const auto& [k, n] : s.legal_counts) legal += n;
  EXPECT_EQ(legal, s.rounds * 52);
  EXPECT_GE(s.mean_legal_count(), 1.0);
}

}  // namespace
}  // namespace spades::harness
