#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "spades/engine/game.h"
#include "spades/harness/agents.h"
#include "spades/harness/stats.h"

namespace spades::harness {

struct MatchConfig {
  std::string a_bidder = "bis";
  std::string a_player = "srp";
  std::string b_bidder = "rb";
  std::string b_player = "srp";
  int games = 1000;
  std::uint64_t seed = 1;
  GameGoals goals;
  // Games come in pairs on the same deals with the partnerships swapped.
  bool swap_seats = true;
  bool blind_nil_allowed = true;
  int max_rounds = 200;
  int threads = 0;  // 0 picks the hardware concurrency
};

// Seed of the deals used by game `index`.
std::uint64_t GameSeed(const MatchConfig& config, int index);
// Partnership of side A in game `index`.
Partnership SideAIn(const MatchConfig& config, int index);

GameResult PlayMatchGame(const MatchConfig& config, const AgentResources& res, int index);

// Plays config.games games. Results and the order in which `sink` sees the
// round logs do not depend on the thread count. Throws std::invalid_argument
// for unknown agent names.
MatchStats RunMatch(const MatchConfig& config, const AgentResources& res,
                    const std::function<void(const RoundLog&)>& sink = {});

enum class Ablation { kSingleCurve, kNoEndgame, kNoConventions };
std::string AblationName(Ablation a);
Ablation AblationFromName(const std::string& name);

// Full BIS as side A against BIS with one component disabled as side B,
// every seat using the base config's side-A player.
MatchConfig AblationConfig(const MatchConfig& base, Ablation which);

}  // namespace spades::harness
