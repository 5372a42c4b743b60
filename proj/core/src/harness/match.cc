#include "spades/harness/match.h"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spades/engine/rng.h"

namespace spades::harness {

std::uint64_t GameSeed(const MatchConfig& config, int index) {
  const int deal = config.swap_seats ? index / 2 : index;
  return DeriveSeed(config.seed, static_cast<std::uint64_t>(deal));
}

Partnership SideAIn(const MatchConfig& config, int index) {
  return config.swap_seats && index % 2 == 1 ? Partnership::kEastWest : Partnership::kNorthSouth;
}

GameResult PlayMatchGame(const MatchConfig& config, const AgentResources& res, int index) {
  const Partnership a = SideAIn(config, index);
  std::array<std::unique_ptr<Agent>, kNumSeats> owned;
  std::array<Agent*, kNumSeats> agents{};
  GameConfig game;
  game.seed = GameSeed(config, index);
  game.goals = config.goals;
  game.blind_nil_allowed = config.blind_nil_allowed;
  game.max_rounds = config.max_rounds;
  for (Seat s : kAllSeats) {
    const bool is_a = PartnershipOf(s) == a;
    const std::string& bidder = is_a ? config.a_bidder : config.b_bidder;
    owned[Index(s)] = MakeAgent(bidder, is_a ? config.a_player : config.b_player, res);
    agents[Index(s)] = owned[Index(s)].get();
    game.partner_is_bis[Index(s)] = IsBisFamily(bidder);
  }
  GameResult result = PlayGame(agents, game);
  for (RoundLog& log : result.rounds) {
    log.game = index;
    log.side_a = a;
  }
  return result;
}

MatchStats RunMatch(const MatchConfig& config, const AgentResources& res,
                    const std::function<void(const RoundLog&)>& sink) {
  // Fail on bad names before spawning workers.
  MakeAgent(config.a_bidder, config.a_player, res);
  MakeAgent(config.b_bidder, config.b_player, res);

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const int chunk = std::max(1, threads) * 8;
  MatchStats stats;
  std::vector<GameResult> results;
  for (int start = 0; start < config.games; start += chunk) {
    const int end = std::min(config.games, start + chunk);
    results.assign(static_cast<std::size_t>(end - start), {});
    auto work = [&](int worker) {
      for (int i = start + worker; i < end; i += threads) {
        results[static_cast<std::size_t>(i - start)] = PlayMatchGame(config, res, i);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const GameResult& g : results) {
      for (const RoundLog& log : g.rounds) {
        stats.Add(log);
        if (sink) sink(log);
      }
    }
  }
  return stats;
}

std::string AblationName(Ablation a) {
  switch (a) {
    case Ablation::kSingleCurve: return "single-curve";
    case Ablation::kNoEndgame: return "no-endgame";
    case Ablation::kNoConventions: return "no-conventions";
  }
  return "?";
}

Ablation AblationFromName(const std::string& name) {
  for (Ablation a : {Ablation::kSingleCurve, Ablation::kNoEndgame, Ablation::kNoConventions}) {
    if (AblationName(a) == name) return a;
  }
  throw std::invalid_argument("unknown ablation '" + name + "'");
}

MatchConfig AblationConfig(const MatchConfig& base, Ablation which) {
  MatchConfig c = base;
  c.a_bidder = "bis";
  c.b_bidder = "bis-" + AblationName(which);
  c.b_player = c.a_player;
  return c;
}

}  // namespace spades::harness
