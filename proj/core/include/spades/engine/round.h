#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/engine/agent.h"
#include "spades/engine/round_state.h"
#include "spades/engine/scoring.h"

namespace spades {

// Uniform 13-card hands for N, E, S, W; a pure function of the seed.
std::array<CardSet, kNumSeats> Deal(std::uint64_t seed);

struct RoundSetup {
  std::uint64_t seed = 0;
  Seat dealer = Seat::kWest;
  GameScore score;  // score before the round
  GameGoals goals;
  bool blind_nil_allowed = false;
  std::array<bool, kNumSeats> partner_is_bis{};  // per seat, enables conventions
};

struct SeatBid {
  Seat seat;
  Bid bid;
};

// Persisted record of one round. Meta fields (game/round indices, labels,
// winner) are filled in by the game runner.
struct RoundLog {
  std::uint64_t seed = 0;
  Seat dealer = Seat::kWest;
  std::array<CardSet, kNumSeats> hands{};
  std::vector<SeatBid> bids;  // in bidding order
  std::vector<Trick> tricks;
  RoundScore score;
  GameScore score_before;
  GameScore score_after;

  std::int64_t game = -1;
  int round = 0;
  std::array<std::string, kNumSeats> labels{};
  Partnership side_a = Partnership::kNorthSouth;  // harness perspective
  std::optional<Partnership> winner;              // set on a game's last round

  std::array<Bid, kNumSeats> BidsBySeat() const;
  std::array<int, kNumSeats> TricksBySeat() const;
};

// Runs bidding and 13 tricks. Agents are indexed by seat. Throws RuleViolation
// when an agent returns an illegal bid or card.
RoundLog PlayRound(std::span<Agent* const, kNumSeats> agents, const RoundSetup& setup);

// Builds the bidding context for the seat about to bid.
BidContext MakeBidContext(const RoundState& state, Seat seat, const RoundSetup& setup);

// Re-executes a log through the engine, checking legality, trick winners and
// scores. Returns the number of legal plays at each of the 52 decisions.
// Throws RuleViolation on any mismatch.
std::vector<int> ReplayRound(const RoundLog& log);

nlohmann::json ToJson(const RoundLog& log);
RoundLog RoundLogFromJson(const nlohmann::json& j);

}  // namespace spades
