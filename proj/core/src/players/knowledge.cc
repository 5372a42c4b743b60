#include "spades/players/knowledge.h"

#include <algorithm>
#include <vector>

namespace spades::players {

std::string RoundTypeName(RoundType t) {
  switch (t) {
    case RoundType::kStrongUnder:
      return "strong_under";
    case RoundType::kUnder:
      return "under";
    case RoundType::kOver:
      return "over";
    case RoundType::kFourteen:
      return "fourteen";
    case RoundType::kStrongOver:
      return "strong_over";
    case RoundType::kWeNil:
      return "we_nil";
    case RoundType::kPartnerNil:
      return "partner_nil";
    case RoundType::kOpponentsNil:
      return "opponents_nil";
    case RoundType::kNilVsNil:
      return "nil_vs_nil";
    case RoundType::kDoubleNil:
      return "double_nil";
  }
  return "under";
}

RoundType ClassifyRound(const std::array<Bid, kNumSeats>& bids, Seat seat) {
  const bool self_nil = bids[Index(seat)].is_nil();
  const bool partner_nil = bids[Index(PartnerOf(seat))].is_nil();
  const int opp_nils = (bids[Index(Next(seat))].is_nil() ? 1 : 0) +
                       (bids[Index(Previous(seat))].is_nil() ? 1 : 0);
  if (opp_nils == 2 || (self_nil && partner_nil)) return RoundType::kDoubleNil;
  if ((self_nil || partner_nil) && opp_nils > 0) return RoundType::kNilVsNil;
  if (self_nil) return RoundType::kWeNil;
  if (partner_nil) return RoundType::kPartnerNil;
  if (opp_nils > 0) return RoundType::kOpponentsNil;
  int sum = 0;
  for (const Bid& b : bids) sum += b.value;
  if (sum <= 8) return RoundType::kStrongUnder;
  if (sum <= 10) return RoundType::kUnder;
  if (sum <= 13) return RoundType::kOver;
  if (sum == 14) return RoundType::kFourteen;
  return RoundType::kStrongOver;
}

int SureFutureTakes(CardSet hand, CardSet unseen) {
  const std::uint16_t mine = hand.RankMask(Suit::kSpades);
  std::uint16_t theirs = unseen.RankMask(Suit::kSpades);
  int beaten = 0;
  // Lowest first, each matched to the cheapest higher unseen spade.
  for (int r = 0; r < kNumRanks; ++r) {
    if (!((mine >> r) & 1U)) continue;
    const std::uint16_t higher = static_cast<std::uint16_t>(theirs & ~((2U << r) - 1));
    if (higher == 0) continue;
    theirs = static_cast<std::uint16_t>(theirs & ~(higher & -higher));
    ++beaten;
  }
  return std::popcount(mine) - beaten;
}

bool PlayView::any_opp_nil_live() const {
  return std::any_of(opp_nil_live.begin(), opp_nil_live.end(), [](bool b) { return b; });
}

PlayView PlayView::Build(const RoundState& state, Seat seat) {
  PlayView v;
  v.seat = seat;
  v.partner = PartnerOf(seat);
  v.hand = state.hand(seat);
  v.unseen = CardSet::FullDeck() - state.played() - v.hand;
  v.bids = state.FinalBids();
  v.round_type = ClassifyRound(v.bids, seat);
  v.remaining = state.TricksRemaining();
  const Partnership own = PartnershipOf(seat);
  for (Seat s : kAllSeats) {
    const Bid& b = v.bids[Index(s)];
    const bool live = b.is_nil() && state.tricks_taken(s) == 0;
    if (PartnershipOf(s) == own) {
      v.own_contract += b.value;
      v.own_tricks += state.tricks_taken(s);
      if (s == seat) v.self_nil_live = live;
      else v.partner_nil_live = live;
    } else {
      v.opp_contract += b.value;
      v.opp_tricks += state.tricks_taken(s);
      v.opp_nil_live[Index(s)] = live;
    }
  }
  return v;
}

bool IsBoss(Card card, CardSet unseen) {
  const std::uint16_t higher = static_cast<std::uint16_t>(unseen.RankMask(card.suit()) >> (card.rank() + 1));
  return higher == 0;
}

Card CurrentWinningCard(const Trick& trick) { return trick.cards[WinningIndex(trick)]; }

Seat CurrentWinningSeat(const Trick& trick) { return trick.SeatOf(WinningIndex(trick)); }

CardSet CardsThatBeat(CardSet legal, const Trick& trick) {
  if (trick.empty()) return legal;
  const Card best = CurrentWinningCard(trick);
  CardSet out;
  for (Card c : legal) {
    if (c.suit() == best.suit() ? c.rank() > best.rank() : c.is_spade()) out.insert(c);
  }
  return out;
}

}  // namespace spades::players
