#include "spades/baselines/baselines.h"

#include <algorithm>
#include <cmath>

#include "spades/bis/hand_eval.h"

namespace spades::baselines {
namespace {

int RoundBid(double raw) {
  return std::clamp(static_cast<int>(std::floor(raw + 0.5)), 1, kMaxBid);
}

bool Has(CardSet hand, Suit suit, int r) { return (hand.RankMask(suit) >> r) & 1U; }

}  // namespace

bool NaiveNilRule::HandQualifies(CardSet hand) const {
  if (hand.CountInSuit(Suit::kSpades) > max_spades) return false;
  for (Suit suit : kAllSuits) {
    unsigned mask = hand.RankMask(suit);
    for (int i = 0; i < 3 && mask != 0; ++i) {
      if (std::countr_zero(mask) > max_rank[i]) return false;
      mask &= mask - 1;
    }
  }
  return true;
}

bool NaiveNilRule::Accepts(CardSet hand, bool partner_bid_nil) const {
  return !partner_bid_nil && HandQualifies(hand);
}

double IoRawValue(CardSet hand) {
  double v = 0.0;
  for (Card c : hand.InSuit(Suit::kSpades)) v += c.rank() >= rank::kTen ? 1.0 : 0.4;
  for (Suit suit : kSideSuits) {
    const bool ace = Has(hand, suit, rank::kAce);
    const bool king = Has(hand, suit, rank::kKing);
    if (ace && king) {
      v += 2.0;
    } else if (ace) {
      v += 1.0;
    } else if (king && hand.CountInSuit(suit) >= 2) {
      v += 0.5;
    }
  }
  return v;
}

int IoRegular(CardSet hand) { return RoundBid(IoRawValue(hand)); }

int MsRegular(CardSet hand) {
  const int spades = hand.CountInSuit(Suit::kSpades);
  int v = 0;
  for (Suit suit : kAllSuits) {
    if (Has(hand, suit, rank::kAce)) ++v;
    if (Has(hand, suit, rank::kKing) && hand.CountInSuit(suit) >= 2) ++v;
  }
  if (Has(hand, Suit::kSpades, rank::kQueen) &&
      (spades >= 3 || Has(hand, Suit::kSpades, rank::kAce))) {
    ++v;
  }
  v += std::max(0, spades - 3);
  if (spades <= 1) --v;
  if (spades == 3) {
    for (Suit suit : kSideSuits) {
      if (hand.CountInSuit(suit) <= 1) {
        ++v;
        break;
      }
    }
  }
  return std::clamp(v, 1, kMaxBid);
}

double RbRawValue(CardSet hand) {
  const int spades = hand.CountInSuit(Suit::kSpades);
  double v = 0.0;
  for (Suit suit : kSideSuits) {
    const int len = hand.CountInSuit(suit);
    if (Has(hand, suit, rank::kAce)) v += 1.0;
    if (Has(hand, suit, rank::kKing) && len >= 2) v += 0.7;
    if (Has(hand, suit, rank::kQueen) && len >= 3) v += 0.3;
    if (len <= 1 && spades >= 3) v += 0.5;
  }
  for (int r = rank::kJack; r <= rank::kAce; ++r) {
    if (Has(hand, Suit::kSpades, r) && bis::MostlyProtected(hand, r)) v += 1.0;
  }
  v += std::max(0, spades - 4);
  return v;
}

int RbRegular(CardSet hand) { return RoundBid(RbRawValue(hand)); }

Bid IoBid(const BidContext& ctx) {
  const CardSet hand = ctx.hand;
  const int regular = IoRegular(hand);
  const auto partner = ctx.partner_bid();
  bool nil = regular <= 3 && partner && partner->value >= 4 &&
             hand.CountInSuit(Suit::kSpades) <= 3;
  for (Suit suit : kAllSuits) {
    if (Has(hand, suit, rank::kAce) || Has(hand, suit, rank::kKing)) nil = false;
  }
  if ((hand.RankMask(Suit::kSpades) >> rank::kTen) != 0) nil = false;
  return nil ? Bid::Nil() : Bid::Regular(regular);
}

Bid MsBid(const BidContext& ctx, const NaiveNilRule& rule) {
  if (rule.Accepts(ctx.hand, ctx.partner_bid_nil())) return Bid::Nil();
  return Bid::Regular(MsRegular(ctx.hand));
}

Bid RbBid(const BidContext& ctx, const NaiveNilRule& rule) {
  if (rule.Accepts(ctx.hand, ctx.partner_bid_nil())) return Bid::Nil();
  return Bid::Regular(RbRegular(ctx.hand));
}

std::string BaselineBidder::name() const {
  switch (kind_) {
    case BaselineKind::kIo: return "io";
    case BaselineKind::kMs: return "ms";
    case BaselineKind::kRb: return "rb";
  }
  return "?";
}

Bid BaselineBidder::ChooseBid(const BidContext& ctx) {
  switch (kind_) {
    case BaselineKind::kIo: return IoBid(ctx);
    case BaselineKind::kMs: return MsBid(ctx);
    case BaselineKind::kRb: return RbBid(ctx);
  }
  return Bid::Regular(1);
}

}  // namespace spades::baselines
