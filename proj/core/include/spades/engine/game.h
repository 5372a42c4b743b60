#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spades/engine/round.h"

namespace spades {

struct GameConfig {
  std::uint64_t seed = 0;
  GameGoals goals;
  Seat first_dealer = Seat::kWest;
  bool blind_nil_allowed = false;
  std::array<bool, kNumSeats> partner_is_bis{};
  int max_rounds = 200;  // safety stop; a stopped game has no winner
};

struct GameResult {
  std::vector<RoundLog> rounds;
  GameScore final_score;
  std::optional<Partnership> winner;
};

// Seed of round `r` in a game seeded with `game_seed`.
std::uint64_t RoundSeed(std::uint64_t game_seed, int r);

// Plays rounds with a rotating dealer until GameWinner reports a winner.
GameResult PlayGame(std::span<Agent* const, kNumSeats> agents, const GameConfig& config);

}  // namespace spades
