#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spades/engine/agent.h"
#include "spades/engine/rng.h"
#include "spades/players/srp.h"

namespace spades::players {

struct UctOptions {
  int iterations = 1000;
  double seconds = 0;           // when > 0, a wall-clock budget replaces iterations
  double exploration = 100;     // UCB constant, in points
  int search_tricks = kTricksPerRound;  // search only when at most this many tricks remain
  SrpOptions rollout;           // policy for every seat after the root move
  std::string name = "uct";
};

struct UctStats {
  int iterations = 0;
  bool exhaustive = false;  // every move scored on every consistent deal
  std::vector<Card> moves;
  std::vector<int> visits;
  std::vector<double> mean_reward;
};

// Random split of the cards `seat` cannot see among the other three seats.
// Hand sizes are kept and no seat receives a suit it has shown out of.
std::array<CardSet, kNumSeats> SampleHiddenHands(const RoundState& state, Seat seat, Rng& rng);

// All consistent splits, or nullopt when there are more than `limit`.
std::optional<std::vector<std::array<CardSet, kNumSeats>>> EnumerateHiddenHands(
    const RoundState& state, Seat seat, std::size_t limit);

// Round delta of the seat's partnership minus that of the opponents, after
// finishing the round with `policy` for every seat. Bags before the round
// are taken as zero.
double RolloutReward(RoundState state, Seat seat, const SrpOptions& policy);

Card UctChooseCard(const RoundState& state, Seat seat, CardSet legal, const UctOptions& options,
                   Rng& rng, UctStats* stats = nullptr);

class UctPlayer : public Player {
 public:
  explicit UctPlayer(UctOptions options = {}) : options_(std::move(options)) {}
  std::string name() const override { return options_.name; }
  void BeginRound(std::uint64_t seed, Seat) override { rng_.Reseed(seed); }
  Card ChooseCard(const RoundState& state, Seat seat, CardSet legal) override;
  const UctStats& last_stats() const { return stats_; }

 private:
  UctOptions options_;
  Rng rng_{0};
  UctStats stats_;
};

}  // namespace spades::players
