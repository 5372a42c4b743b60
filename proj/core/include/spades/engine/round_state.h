#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spades/engine/card.h"
#include "spades/engine/seat.h"

namespace spades {

inline constexpr int kTricksPerRound = 13;
inline constexpr int kMaxBid = 13;

// Signals a programming error by an agent or caller: out-of-turn action,
// illegal card, malformed bid.
class RuleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Bid {
  int value = 0;
  bool blind = false;  // blind nil; implies value == 0

  static constexpr Bid Regular(int v) { return Bid{v, false}; }
  static constexpr Bid Nil() { return Bid{0, false}; }
  static constexpr Bid BlindNil() { return Bid{0, true}; }

  constexpr bool is_nil() const { return value == 0; }
  constexpr bool valid() const { return value >= 0 && value <= kMaxBid && (!blind || value == 0); }
  friend constexpr bool operator==(Bid, Bid) = default;
};

struct Trick {
  Seat leader = Seat::kNorth;
  std::array<Card, kNumSeats> cards{};
  int size = 0;
  Seat winner = Seat::kNorth;  // valid once complete()

  constexpr bool empty() const { return size == 0; }
  constexpr bool complete() const { return size == kNumSeats; }
  constexpr Seat SeatOf(int i) const { return SeatAt(Index(leader) + i); }
  constexpr Suit lead_suit() const { return cards[0].suit(); }
  constexpr Seat NextToPlay() const { return SeatOf(size); }
  std::optional<Card> CardOf(Seat s) const;
};

// Index of the play currently winning a non-empty trick: highest spade if any
// spade was played, else highest card of the lead suit.
int WinningIndex(const Trick& trick);

// Winner of a complete trick. Throws RuleViolation when fewer than 4 plays.
Seat ResolveTrick(const Trick& trick);

// Legal cards for a hand facing `current` (the trick in progress, possibly empty).
CardSet LegalPlaysFor(CardSet hand, const Trick& current, bool spades_broken);

enum class Phase { kBidding, kPlaying, kDone };

class RoundState {
 public:
  RoundState(Seat dealer, const std::array<CardSet, kNumSeats>& hands);

  Phase phase() const { return phase_; }
  Seat dealer() const { return dealer_; }
  Seat first_bidder() const { return Next(dealer_); }
  Seat ToAct() const { return to_act_; }

  CardSet hand(Seat s) const { return hands_[Index(s)]; }
  const std::array<CardSet, kNumSeats>& hands() const { return hands_; }

  const std::optional<Bid>& bid(Seat s) const { return bids_[Index(s)]; }
  int bids_made() const { return bids_made_; }
  // Bids in the order they were made (from the dealer's left).
  std::vector<Bid> BidsInOrder() const;
  // All four bids; requires the bidding phase to be over.
  std::array<Bid, kNumSeats> FinalBids() const;

  const Trick& current_trick() const { return current_; }
  std::span<const Trick> completed_tricks() const {
    return std::span<const Trick>(completed_.data(), static_cast<std::size_t>(num_completed_));
  }
  int tricks_completed() const { return num_completed_; }
  int TricksRemaining() const { return kTricksPerRound - num_completed_; }
  int tricks_taken(Seat s) const { return tricks_taken_[Index(s)]; }
  int tricks_taken(Partnership p) const;
  const std::array<int, kNumSeats>& all_tricks_taken() const { return tricks_taken_; }

  bool spades_broken() const { return spades_broken_; }
  // Every card played so far, including the trick in progress.
  CardSet played() const { return played_; }
  // Suits a seat has publicly shown out of (bit i = suit i).
  unsigned known_voids(Seat s) const { return voids_[Index(s)]; }
  bool KnownVoid(Seat s, Suit suit) const { return (voids_[Index(s)] >> static_cast<int>(suit)) & 1U; }

  // Throws RuleViolation when it is not `seat`'s turn to play.
  CardSet LegalPlays(Seat seat) const;

  void ApplyBid(Seat seat, Bid bid);
  void ApplyCard(Seat seat, Card card);

  // Swaps in a different split of the cards still in hand, for search over
  // hidden information. Each seat keeps its hand size and the pool of
  // unplayed cards must not change.
  void Redeal(const std::array<CardSet, kNumSeats>& hands);

 private:
  Phase phase_ = Phase::kBidding;
  Seat dealer_;
  Seat to_act_;
  std::array<CardSet, kNumSeats> hands_;
  std::array<std::optional<Bid>, kNumSeats> bids_{};
  int bids_made_ = 0;
  Trick current_;
  std::array<Trick, kTricksPerRound> completed_{};
  int num_completed_ = 0;
  std::array<int, kNumSeats> tricks_taken_{};
  std::array<unsigned, kNumSeats> voids_{};
  CardSet played_;
  bool spades_broken_ = false;
};

// Convenience wrapper with the argument order of the rules text.
inline CardSet LegalPlays(const RoundState& state, Seat seat) { return state.LegalPlays(seat); }

std::string ToString(const Trick& trick);

}  // namespace spades
