#include "spades/engine/game.h"

#include "spades/engine/rng.h"

namespace spades {

std::uint64_t RoundSeed(std::uint64_t game_seed, int r) {
  return DeriveSeed(game_seed, static_cast<std::uint64_t>(r));
}

GameResult PlayGame(std::span<Agent* const, kNumSeats> agents, const GameConfig& config) {
  GameResult result;
  Seat dealer = config.first_dealer;
  for (int r = 0; r < config.max_rounds; ++r) {
    RoundSetup setup;
    setup.seed = RoundSeed(config.seed, r);
    setup.dealer = dealer;
    setup.score = result.final_score;
    setup.goals = config.goals;
    setup.blind_nil_allowed = config.blind_nil_allowed;
    setup.partner_is_bis = config.partner_is_bis;

    RoundLog log = PlayRound(agents, setup);
    log.round = r;
    for (Seat s : kAllSeats) log.labels[Index(s)] = agents[Index(s)]->name();
    result.final_score = log.score_after;
    result.winner = GameWinner(result.final_score, config.goals);
    log.winner = result.winner;
    result.rounds.push_back(std::move(log));
    if (result.winner) break;
    dealer = Next(dealer);
  }
  return result;
}

}  // namespace spades
