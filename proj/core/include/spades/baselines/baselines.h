#pragma once

#include <array>
#include <span>
#include <string>

#include "spades/engine/agent.h"

namespace spades::baselines {

// Nil when every suit's lowest, second and third lowest cards are at or below
// the thresholds (missing cards pass), the hand has few spades and the
// partner has not bid nil.
struct NaiveNilRule {
  std::array<int, 3> max_rank = {rank::kFive, rank::kEight, rank::kTen};
  int max_spades = 3;

  bool HandQualifies(CardSet hand) const;
  bool Accepts(CardSet hand, bool partner_bid_nil) const;
};

// Regular bids, rounded half up and clamped to [1, 13].
int IoRegular(CardSet hand);
int MsRegular(CardSet hand);
int RbRegular(CardSet hand);

double IoRawValue(CardSet hand);
double RbRawValue(CardSet hand);

Bid IoBid(const BidContext& ctx);
Bid MsBid(const BidContext& ctx, const NaiveNilRule& rule = {});
Bid RbBid(const BidContext& ctx, const NaiveNilRule& rule = {});

enum class BaselineKind { kIo, kMs, kRb };

class BaselineBidder : public Bidder {
 public:
  explicit BaselineBidder(BaselineKind kind) : kind_(kind) {}
  std::string name() const override;
  Bid ChooseBid(const BidContext& ctx) override;

 private:
  BaselineKind kind_;
};

}  // namespace spades::baselines
