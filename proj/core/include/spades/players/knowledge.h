#pragma once

#include <array>
#include <string>

#include "spades/engine/card.h"
#include "spades/engine/round_state.h"
#include "spades/engine/seat.h"

namespace spades::players {

enum class RoundType {
  kStrongUnder,
  kUnder,
  kOver,
  kFourteen,
  kStrongOver,
  kWeNil,
  kPartnerNil,
  kOpponentsNil,
  kNilVsNil,
  kDoubleNil,
};
inline constexpr int kNumRoundTypes = 10;

std::string RoundTypeName(RoundType t);

// Round type from `seat`'s point of view.
RoundType ClassifyRound(const std::array<Bid, kNumSeats>& bids, Seat seat);

// Worst-case spade winners: every unseen spade sits with one opponent and the
// agent leads each spade trick. Equals the hand's spade count minus the
// largest matching of hand spades to distinct higher unseen spades.
int SureFutureTakes(CardSet hand, CardSet unseen);

// Facts one seat can derive from its own hand and public information.
struct PlayView {
  Seat seat;
  Seat partner;
  CardSet hand;
  CardSet unseen;  // cards not in hand and not yet played
  std::array<Bid, kNumSeats> bids{};
  RoundType round_type = RoundType::kUnder;

  int own_contract = 0;  // non-nil bids of the partnership
  int opp_contract = 0;
  int own_tricks = 0;    // pooled tricks of the partnership
  int opp_tricks = 0;
  int remaining = 0;     // tricks not yet completed

  bool self_nil_live = false;
  bool partner_nil_live = false;
  // Live opponent nil bidders (niler has taken no trick yet).
  std::array<bool, kNumSeats> opp_nil_live{};

  int own_need() const { return own_contract > own_tricks ? own_contract - own_tricks : 0; }
  int opp_need() const { return opp_contract > opp_tricks ? opp_contract - opp_tricks : 0; }
  bool any_opp_nil_live() const;

  static PlayView Build(const RoundState& state, Seat seat);
};

// True when no unseen card of the same suit outranks `card`.
bool IsBoss(Card card, CardSet unseen);

// The card currently winning the trick in progress; the trick must be
// non-empty.
Card CurrentWinningCard(const Trick& trick);
Seat CurrentWinningSeat(const Trick& trick);

// Cards of `legal` that would beat the current trick's winner right now.
CardSet CardsThatBeat(CardSet legal, const Trick& trick);

}  // namespace spades::players
