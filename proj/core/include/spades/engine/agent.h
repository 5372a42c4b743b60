#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spades/engine/card.h"
#include "spades/engine/round_state.h"
#include "spades/engine/scoring.h"
#include "spades/engine/seat.h"

namespace spades {

// Everything a bidder may look at when it is its turn to bid.
struct BidContext {
  CardSet hand;                 // empty while the hand is still face down
  bool hand_visible = true;
  std::vector<Bid> prev_bids;   // 0..3 bids, in bidding order
  Seat seat = Seat::kSouth;
  Seat dealer = Seat::kWest;
  GameScore score;
  GameGoals goals;
  bool partner_is_bis = false;  // both partners share the nil conventions
  bool blind_allowed = false;

  // 1-based position in the bidding order.
  int position() const { return static_cast<int>(prev_bids.size()) + 1; }
  Partnership side() const { return PartnershipOf(seat); }
  int own_points() const { return score.points_of(side()); }
  int opp_points() const { return score.points_of(Other(side())); }
  int own_bags() const { return score.bags_of(side()); }

  // Partner bid two turns earlier, so it is visible from position 3 on.
  std::optional<Bid> partner_bid() const {
    if (prev_bids.size() < 2) return std::nullopt;
    return prev_bids[prev_bids.size() - 2];
  }
  // Opponent bids already made: RHO (last) and, in position 4, LHO (first).
  std::vector<Bid> opponent_bids() const;
  bool partner_bid_nil() const { return partner_bid() && partner_bid()->is_nil(); }
  bool opponent_bid_nil() const;
};

class Bidder {
 public:
  virtual ~Bidder() = default;
  virtual std::string name() const = 0;
  virtual void BeginRound(std::uint64_t /*seed*/, Seat /*seat*/) {}
  // Asked before the hand is revealed when blind nil is allowed.
  virtual bool ChooseBlindNil(const BidContext& /*ctx*/) { return false; }
  virtual Bid ChooseBid(const BidContext& ctx) = 0;
};

class Player {
 public:
  virtual ~Player() = default;
  virtual std::string name() const = 0;
  virtual void BeginRound(std::uint64_t /*seed*/, Seat /*seat*/) {}
  // Must return a member of `legal`. Implementations read only their own hand
  // and public information from `state`.
  virtual Card ChooseCard(const RoundState& state, Seat seat, CardSet legal) = 0;
};

// A bid-and-play agent: one bidder paired with one playing module.
class Agent {
 public:
  Agent(std::unique_ptr<Bidder> bidder, std::unique_ptr<Player> player);

  std::string name() const;
  void BeginRound(std::uint64_t seed, Seat seat);
  bool ChooseBlindNil(const BidContext& ctx) { return bidder_->ChooseBlindNil(ctx); }
  Bid ChooseBid(const BidContext& ctx) { return bidder_->ChooseBid(ctx); }
  Card ChooseCard(const RoundState& state, Seat seat, CardSet legal) {
    return player_->ChooseCard(state, seat, legal);
  }

  Bidder& bidder() { return *bidder_; }
  Player& player() { return *player_; }

 private:
  std::unique_ptr<Bidder> bidder_;
  std::unique_ptr<Player> player_;
};

}  // namespace spades
