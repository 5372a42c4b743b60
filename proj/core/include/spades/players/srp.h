#pragma once

#include <string>

#include "spades/engine/agent.h"
#include "spades/engine/rng.h"
#include "spades/players/knowledge.h"

namespace spades::players {

struct SrpOptions {
  bool signals = true;        // high-low doubleton, and reading it
  bool bag_avoidance = true;  // duck once the contract is safe
  bool sure_takes = true;     // count guaranteed spade winners when planning
  std::string name = "srp";
};

// The weak variant: the same cascade with signals, bag avoidance and
// sure-take planning switched off.
SrpOptions WeakOptions();

// Rule-based card choice. Reads only the seat's own hand and public
// information, so it can also drive search rollouts.
Card SrpChooseCard(const RoundState& state, Seat seat, CardSet legal, const SrpOptions& options);

class SrpPlayer : public Player {
 public:
  explicit SrpPlayer(SrpOptions options = {}) : options_(std::move(options)) {}
  std::string name() const override { return options_.name; }
  Card ChooseCard(const RoundState& state, Seat seat, CardSet legal) override {
    return SrpChooseCard(state, seat, legal, options_);
  }

 private:
  SrpOptions options_;
};

class RandomPlayer : public Player {
 public:
  std::string name() const override { return "random"; }
  void BeginRound(std::uint64_t seed, Seat) override { rng_.Reseed(seed); }
  Card ChooseCard(const RoundState&, Seat, CardSet legal) override {
    const auto cards = legal.ToVector();
    return cards[rng_.Below(cards.size())];
  }

 private:
  Rng rng_{0};
};

}  // namespace spades::players
