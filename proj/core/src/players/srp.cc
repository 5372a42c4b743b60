#include "spades/players/srp.h"

#include <optional>

namespace spades::players {
namespace {

// Orders cards for "play low": side suits before spades, then by rank.
bool LowerThan(Card a, Card b) {
  if (a.is_spade() != b.is_spade()) return !a.is_spade();
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.index() < b.index();
}

Card Lowest(CardSet cards) {
  Card best = *cards.begin();
  for (Card c : cards) {
    if (LowerThan(c, best)) best = c;
  }
  return best;
}

// Highest rank, side suits before spades.
Card Highest(CardSet cards) {
  Card best = *cards.begin();
  for (Card c : cards) {
    const bool better = c.is_spade() != best.is_spade() ? !c.is_spade() : c.rank() > best.rank();
    if (better) best = c;
  }
  return best;
}

// Lowest card by plain rank, spades included.
Card LowestRank(CardSet cards) {
  Card best = *cards.begin();
  for (Card c : cards) {
    if (c.rank() < best.rank()) best = c;
  }
  return best;
}

Card HighestRank(CardSet cards) {
  Card best = *cards.begin();
  for (Card c : cards) {
    if (c.rank() > best.rank()) best = c;
  }
  return best;
}

bool SuitAlreadyLed(const RoundState& state, Suit suit) {
  for (const Trick& t : state.completed_tricks()) {
    if (t.lead_suit() == suit) return true;
  }
  return false;
}

// Suits in which the partner followed high then low on the first two leads,
// which shows a doubleton that is now exhausted.
unsigned PartnerDoubletonSignals(const RoundState& state, Seat partner) {
  unsigned out = 0;
  for (Suit suit : kSideSuits) {
    std::optional<Card> first;
    std::optional<Card> second;
    int leads = 0;
    for (const Trick& t : state.completed_tricks()) {
      if (t.lead_suit() != suit) continue;
      ++leads;
      const auto c = t.CardOf(partner);
      if (!c || c->suit() != suit) break;
      if (leads == 1 && t.winner == partner) break;
      if (leads == 1) first = c;
      if (leads == 2) second = c;
      if (leads >= 2) break;
    }
    if (first && second && first->rank() > second->rank() && leads == 2) {
      out |= 1U << static_cast<int>(suit);
    }
  }
  return out;
}

class Decider {
 public:
  Decider(const RoundState& state, Seat seat, CardSet legal, const SrpOptions& options)
      : state_(state),
        seat_(seat),
        legal_(legal),
        options_(options),
        view_(PlayView::Build(state, seat)),
        trick_(state.current_trick()) {}

  Card Choose() {
    if (legal_.size() == 1) return *legal_.begin();
    if (view_.self_nil_live) return PlayAsNiler();
    if (view_.partner_nil_live) return PlayAsCoverer();
    if (view_.any_opp_nil_live() && CanAffordSettingNil()) {
      if (const auto c = PlayToSetNiler()) return *c;
    }
    return PlayForContract();
  }

 private:
  bool Leading() const { return trick_.empty(); }
  bool LastToPlay() const { return trick_.size == kNumSeats - 1; }
  bool HasPlayed(Seat s) const { return trick_.CardOf(s).has_value(); }
  CardSet Beaters() const { return CardsThatBeat(legal_, trick_); }
  CardSet Duckers() const { return legal_ - Beaters(); }

  int Sure() const { return options_.sure_takes ? SureFutureTakes(view_.hand, view_.unseen) : 0; }

  bool CanAffordSettingNil() const {
    if (!options_.sure_takes) return true;
    return view_.own_need() <= Sure() + view_.own_tricks;
  }

  // Plays low without trying to win; shows a doubleton high-low when asked.
  Card PlayLow() const {
    const CardSet duck = Duckers();
    if (duck.empty()) return Lowest(legal_);
    if (options_.signals && !Leading()) {
      const Suit led = trick_.lead_suit();
      const CardSet in_suit = view_.hand.InSuit(led);
      if (in_suit.size() == 2 && (duck & in_suit) == in_suit && !SuitAlreadyLed(state_, led) &&
          IsBoss(CurrentWinningCard(trick_), view_.unseen)) {
        // The high card is only spent when it could not win a later round.
        const Card high = in_suit.Highest();
        const int above = std::popcount(static_cast<unsigned>(view_.unseen.RankMask(led) >> (high.rank() + 1)));
        if (above >= 2) return high;
      }
    }
    return Lowest(duck);
  }

  // ---- own nil -----------------------------------------------------------
  Card PlayAsNiler() const {
    if (Leading()) {
      // Lead the card with the most unseen cards above it in its suit.
      Card best = *legal_.begin();
      int best_cover = -1;
      for (Card c : legal_) {
        const int cover = std::popcount(
            static_cast<unsigned>(view_.unseen.RankMask(c.suit()) >> (c.rank() + 1)));
        const bool better = cover > best_cover || (cover == best_cover && LowerThan(c, best));
        if (better) {
          best = c;
          best_cover = cover;
        }
      }
      return best;
    }
    const CardSet duck = Duckers();
    if (!duck.empty()) return HighestRank(duck);
    return LastToPlay() ? HighestRank(legal_) : LowestRank(legal_);
  }

  // ---- partner's nil -----------------------------------------------------
  Card PlayAsCoverer() const {
    const Seat partner = view_.partner;
    if (Leading()) {
      for (Suit s : kSideSuits) {
        if (state_.KnownVoid(partner, s) && !view_.hand.InSuit(s).empty() &&
            !(legal_ & CardSet::OfSuit(s)).empty()) {
          return Lowest(legal_ & CardSet::OfSuit(s));
        }
      }
      CardSet bosses;
      for (Card c : legal_) {
        if (IsBoss(c, view_.unseen)) bosses.insert(c);
      }
      return bosses.empty() ? Highest(legal_) : Highest(bosses);
    }
    if (HasPlayed(partner)) {
      if (CurrentWinningSeat(trick_) != partner) return PlayForContract();
      const CardSet over = Beaters();
      return over.empty() ? Lowest(legal_) : Lowest(over);
    }
    // Partner plays after us: make the trick expensive.
    const CardSet over = Beaters();
    if (over.empty()) return Lowest(legal_);
    if (!legal_.InSuit(trick_.lead_suit()).empty()) return HighestRank(over);
    return LowestRank(over);
  }

  // ---- opponent's nil ----------------------------------------------------
  std::optional<Card> PlayToSetNiler() const {
    Seat niler = seat_;
    for (Seat s : kAllSeats) {
      if (view_.opp_nil_live[Index(s)]) niler = s;
    }
    if (Leading()) {
      CardSet candidates;
      for (Suit s : kAllSuits) {
        if (!state_.KnownVoid(niler, s)) candidates |= legal_.InSuit(s);
      }
      if (candidates.empty()) return std::nullopt;
      return Lowest(candidates);
    }
    if (HasPlayed(niler)) {
      if (CurrentWinningSeat(trick_) != niler) return std::nullopt;
      const CardSet duck = Duckers();
      return duck.empty() ? LowestRank(legal_) : Lowest(duck);
    }
    // Niler still to play: keep the bar low.
    const CardSet duck = Duckers();
    return duck.empty() ? Lowest(legal_) : Lowest(duck);
  }

  // ---- contract play -----------------------------------------------------
  // Every contract is either made or cannot be made any more.
  bool AvoidingBags() const {
    if (!options_.bag_avoidance || view_.any_opp_nil_live()) return false;
    const bool own_safe = view_.own_need() == 0 || (options_.sure_takes && view_.own_need() <= Sure());
    const bool opp_settled = view_.opp_need() == 0 || view_.opp_need() > view_.remaining;
    return own_safe && opp_settled;
  }

  bool PartnerHoldsTrick() const {
    if (trick_.empty() || CurrentWinningSeat(trick_) != view_.partner) return false;
    if (LastToPlay()) return true;
    const Card best = CurrentWinningCard(trick_);
    if (!IsBoss(best, view_.unseen)) return false;
    if (best.is_spade()) return true;
    // The remaining opponent could still cut.
    return !state_.KnownVoid(Next(seat_), best.suit());
  }

  Card PlayForContract() const {
    if (Leading()) return Lead();
    if (AvoidingBags()) {
      const CardSet duck = Duckers();
      if (!duck.empty()) return HighestRank(duck);
      return LastToPlay() ? HighestRank(legal_) : LowestRank(legal_);
    }
    if (PartnerHoldsTrick()) return PlayLow();
    const CardSet winners = Beaters();
    if (winners.empty()) return PlayLow();
    const bool cutting = (*winners.begin()).is_spade() && trick_.lead_suit() != Suit::kSpades &&
                         legal_.InSuit(trick_.lead_suit()).empty();
    if (LastToPlay() || cutting) return LowestRank(winners);
    CardSet bosses;
    for (Card c : winners) {
      if (IsBoss(c, view_.unseen)) bosses.insert(c);
    }
    if (!bosses.empty()) return LowestRank(bosses);
    if (trick_.size == 1) return PlayLow();  // second hand low
    return HighestRank(winners);
  }

  Card Lead() const {
    if (AvoidingBags()) return Lowest(legal_);
    const Seat lho = Next(seat_);
    const Seat rho = Previous(seat_);
    // Cash side-suit winners no opponent is known to cut.
    CardSet cash;
    for (Card c : legal_) {
      if (c.is_spade() || !IsBoss(c, view_.unseen)) continue;
      if (state_.KnownVoid(lho, c.suit()) || state_.KnownVoid(rho, c.suit())) continue;
      cash.insert(c);
    }
    if (!cash.empty()) return HighestRank(cash);

    const CardSet my_spades = legal_.InSuit(Suit::kSpades);
    if (!my_spades.empty() && view_.own_need() > 0) {
      const Card top = my_spades.Highest();
      if (IsBoss(top, view_.unseen)) return top;
    }

    // Give partner a cut.
    if (!state_.KnownVoid(view_.partner, Suit::kSpades)) {
      unsigned partner_short = 0;
      for (Suit s : kSideSuits) {
        if (state_.KnownVoid(view_.partner, s)) partner_short |= 1U << static_cast<int>(s);
      }
      if (options_.signals) partner_short |= PartnerDoubletonSignals(state_, view_.partner);
      for (Suit s : kSideSuits) {
        if (!((partner_short >> static_cast<int>(s)) & 1U)) continue;
        const CardSet cards = legal_.InSuit(s);
        if (!cards.empty()) return cards.Lowest();
      }
    }

    // Lead low from the shortest side suit to build a cut.
    std::optional<Suit> shortest;
    for (Suit s : kSideSuits) {
      const int n = legal_.CountInSuit(s);
      if (n == 0) continue;
      if (!shortest || n < legal_.CountInSuit(*shortest)) shortest = s;
    }
    if (shortest) return legal_.InSuit(*shortest).Lowest();
    return Lowest(legal_);
  }

  const RoundState& state_;
  Seat seat_;
  CardSet legal_;
  const SrpOptions& options_;
  PlayView view_;
  const Trick& trick_;
};

}  // namespace

SrpOptions WeakOptions() {
  SrpOptions o;
  o.signals = false;
  o.bag_avoidance = false;
  o.sure_takes = false;
  o.name = "wrp";
  return o;
}

Card SrpChooseCard(const RoundState& state, Seat seat, CardSet legal, const SrpOptions& options) {
  if (legal.empty()) throw RuleViolation("no legal card to choose from");
  return Decider(state, seat, legal, options).Choose();
}

}  // namespace spades::players
