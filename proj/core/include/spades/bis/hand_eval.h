#pragma once

#include <span>

#include "spades/engine/card.h"
#include "spades/engine/round_state.h"

namespace spades::bis {

struct RegularEvaluation {
  double side_high_cards = 0.0;
  double spade_sure = 0.0;       // top spades in sequence from the ace
  double spade_high_long = 0.0;  // remaining spades valued as honors and length
  double spade_cuts = 0.0;       // remaining spades valued as short-suit cuts
  double spade_value = 0.0;      // sure + max(high_long, cuts)
  double prev_bids_factor = 0.0;
  double raw = 0.0;  // side_high_cards + spade_value, before the factor
  int takes = 1;     // rounded and clamped to [1, 13]
};

// A spade honor is mostly protected when the hand holds more spades than
// there are higher spades it does not own.
bool MostlyProtected(CardSet hand, int rank);

// Honors (A, K, Q, J) that are mostly protected plus every spade beyond the
// fourth, counted over the given spade ranks as if they were the whole holding.
double SpadeHighAndLong(CardSet hand);

// Value of `spares` spades used to cut short side suits: the best `spares`
// cut opportunities among voids, singletons and doubletons.
double ShortSuitCutValue(CardSet hand, int spares, int cut_opponents);

double SideSuitHighCards(CardSet hand, int cut_opponents);

// Correction from earlier bids: 0 when they are at or below 2.6 per bidder,
// otherwise -0.5 per trick the projected total exceeds 11, capped at 1.
double PrevBidsFactor(std::span<const Bid> prev_bids, double raw);

// cut_opponents is 1 when an opponent already bid nil, otherwise 2.
RegularEvaluation EvaluateRegular(CardSet hand, std::span<const Bid> prev_bids, int cut_opponents = 2,
                                  double extra_adjustment = 0.0);

// Product of the per-suit clean-nil probabilities, times 1.15 (capped at 1)
// when the hand has a void.
double NilValue(CardSet hand);

inline constexpr double kVoidNilFactor = 1.15;

}  // namespace spades::bis
