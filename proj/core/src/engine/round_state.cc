#include "spades/engine/round_state.h"

namespace spades {

std::optional<Card> Trick::CardOf(Seat s) const {
  const int i = Distance(leader, s);
  if (i >= size) return std::nullopt;
  return cards[i];
}

int WinningIndex(const Trick& trick) {
  int best = 0;
  for (int i = 1; i < trick.size; ++i) {
    const Card c = trick.cards[i];
    const Card b = trick.cards[best];
    if (c.suit() == b.suit()) {
      if (c.rank() > b.rank()) best = i;
    } else if (c.is_spade()) {
      best = i;
    }
  }
  return best;
}

Seat ResolveTrick(const Trick& trick) {
  if (!trick.complete()) throw RuleViolation("cannot resolve an incomplete trick");
  return trick.SeatOf(WinningIndex(trick));
}

CardSet LegalPlaysFor(CardSet hand, const Trick& current, bool spades_broken) {
  if (!current.empty()) {
    CardSet follow = hand.InSuit(current.lead_suit());
    return follow.empty() ? hand : follow;
  }
  if (!spades_broken) {
    CardSet non_spades = hand - CardSet::OfSuit(Suit::kSpades);
    if (!non_spades.empty()) return non_spades;
  }
  return hand;
}

RoundState::RoundState(Seat dealer, const std::array<CardSet, kNumSeats>& hands)
    : dealer_(dealer), to_act_(Next(dealer)), hands_(hands) {
  CardSet seen;
  for (CardSet h : hands_) {
    if (h.size() != kHandSize) throw RuleViolation("every hand must hold 13 cards");
    if (!(seen & h).empty()) throw RuleViolation("hands overlap");
    seen |= h;
  }
}

std::vector<Bid> RoundState::BidsInOrder() const {
  std::vector<Bid> out;
  out.reserve(static_cast<std::size_t>(bids_made_));
  for (int i = 0; i < bids_made_; ++i) out.push_back(*bids_[Index(SeatAt(Index(dealer_) + 1 + i))]);
  return out;
}

std::array<Bid, kNumSeats> RoundState::FinalBids() const {
  if (bids_made_ < kNumSeats) throw RuleViolation("bidding is not finished");
  std::array<Bid, kNumSeats> out;
  for (int i = 0; i < kNumSeats; ++i) out[i] = *bids_[i];
  return out;
}

int RoundState::tricks_taken(Partnership p) const {
  const int a = Index(p);
  return tricks_taken_[a] + tricks_taken_[a + 2];
}

CardSet RoundState::LegalPlays(Seat seat) const {
  if (phase_ != Phase::kPlaying) throw RuleViolation("not in the playing phase");
  if (seat != to_act_) throw RuleViolation("not this seat's turn");
  return LegalPlaysFor(hands_[Index(seat)], current_, spades_broken_);
}

void RoundState::ApplyBid(Seat seat, Bid bid) {
  if (phase_ != Phase::kBidding) throw RuleViolation("not in the bidding phase");
  if (seat != to_act_) throw RuleViolation("bid out of turn");
  if (!bid.valid()) throw RuleViolation("invalid bid");
  bids_[Index(seat)] = bid;
  ++bids_made_;
  to_act_ = Next(seat);
  if (bids_made_ == kNumSeats) {
    phase_ = Phase::kPlaying;
    to_act_ = first_bidder();
    current_ = Trick{};
    current_.leader = to_act_;
  }
}

void RoundState::ApplyCard(Seat seat, Card card) {
  if (!LegalPlays(seat).contains(card)) throw RuleViolation("illegal card " + card.ToCode());
  if (!current_.empty() && card.suit() != current_.lead_suit()) {
    voids_[Index(seat)] |= 1U << static_cast<int>(current_.lead_suit());
  }
  hands_[Index(seat)].erase(card);
  played_.insert(card);
  if (card.is_spade()) spades_broken_ = true;
  current_.cards[current_.size++] = card;
  if (!current_.complete()) {
    to_act_ = Next(seat);
    return;
  }
  current_.winner = ResolveTrick(current_);
  ++tricks_taken_[Index(current_.winner)];
  completed_[num_completed_++] = current_;
  const Seat leader = current_.winner;
  current_ = Trick{};
  current_.leader = leader;
  to_act_ = leader;
  if (num_completed_ == kTricksPerRound) phase_ = Phase::kDone;
}

void RoundState::Redeal(const std::array<CardSet, kNumSeats>& hands) {
  CardSet before;
  CardSet after;
  for (int i = 0; i < kNumSeats; ++i) {
    if (hands[i].size() != hands_[i].size()) throw RuleViolation("redeal changes a hand size");
    if (!(after & hands[i]).empty()) throw RuleViolation("redeal hands overlap");
    before |= hands_[i];
    after |= hands[i];
  }
  if (before != after) throw RuleViolation("redeal changes the unplayed cards");
  hands_ = hands;
}

std::string ToString(const Trick& trick) {
  std::string out;
  for (int i = 0; i < trick.size; ++i) {
    if (i) out += ' ';
    out += SeatChar(trick.SeatOf(i));
    out += ':';
    out += trick.cards[i].ToCode();
  }
  return out;
}

}  // namespace spades
