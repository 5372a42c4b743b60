#include "spades/bis/bis_bidder.h"

#include <algorithm>
#include <numeric>

namespace spades::bis {
namespace {

constexpr int kAssumedBid = 3;
constexpr int kBigSixDeficit = 100;
constexpr int kOvertakeMargin = 20;
constexpr int kMaxOvertake = 2;
constexpr int kConservativeMargin = 10;
constexpr int kBagHeadroom = 2;
constexpr int kCompleteTotal = 14;
constexpr int kEasyContract = 11;

bool EverySideSuitReaches(CardSet hand, int min_rank) {
  for (Suit s : kSideSuits) {
    const std::uint16_t mask = hand.RankMask(s);
    if (mask != 0 && (mask >> min_rank) == 0) return false;
  }
  return true;
}

int SumValues(const std::vector<Bid>& bids) {
  int s = 0;
  for (const Bid& b : bids) s += b.value;
  return s;
}

bool AnyNil(const std::vector<Bid>& bids) {
  return std::any_of(bids.begin(), bids.end(), [](const Bid& b) { return b.is_nil(); });
}

// Partner's reserved bid under the convention currently in force.
Convention PartnerSignal(const BidContext& ctx) {
  if (!ctx.partner_is_bis) return Convention::kNone;
  const auto pb = ctx.partner_bid();
  if (!pb || pb->is_nil()) return Convention::kNone;
  const Convention active = ActiveConvention(ctx);
  return pb->value == ReservedBid(active) ? active : Convention::kNone;
}

}  // namespace

Convention ActiveConvention(const BidContext& ctx) {
  return ctx.own_points() - ctx.opp_points() < -kBigSixDeficit ? Convention::kBigSix
                                                                : Convention::kBigFive;
}

bool MeetsBigFive(CardSet hand, int takes) {
  const bool top_spade = hand.contains(Card(Suit::kSpades, rank::kAce)) ||
                         hand.contains(Card(Suit::kSpades, rank::kKing));
  return top_spade && takes >= 4 && takes <= 6 && EverySideSuitReaches(hand, rank::kJack);
}

bool MeetsBigSix(CardSet hand, int takes) {
  return hand.contains(Card(Suit::kSpades, rank::kAce)) && takes >= 4 &&
         EverySideSuitReaches(hand, rank::kTen);
}

EndgameView ProjectEndgame(const BidContext& ctx, int own_bid) {
  EndgameView v;
  const auto partner = ctx.partner_bid();
  const int partner_value = partner ? partner->value : kAssumedBid;
  const std::vector<Bid> opp = ctx.opponent_bids();
  const int opp_value = SumValues(opp) + kAssumedBid * (2 - static_cast<int>(opp.size()));
  v.own_projected = ctx.own_points() + 10 * (own_bid + partner_value);
  v.opp_projected = ctx.opp_points() + 10 * opp_value;
  v.own_can_win = v.own_projected >= ctx.goals.win;
  v.opp_can_win = v.opp_projected >= ctx.goals.win;
  return v;
}

Bid DecideBid(const BidContext& ctx, const BisConfig& config, const sc::SCTable* curves,
              Rng* explore, BidTrace* trace) {
  BidTrace local;
  BidTrace& t = trace ? *trace : local;
  t = BidTrace{};

  const bool partner_nil = ctx.partner_bid_nil();
  const bool opp_nil = ctx.opponent_bid_nil();
  const int cut_opponents = opp_nil ? 1 : 2;

  // End-game rule (1) acts on the raw sum, so the projection uses a first
  // estimate without it.
  RegularEvaluation reg = EvaluateRegular(ctx.hand, ctx.prev_bids, cut_opponents);
  EndgameView view = ProjectEndgame(ctx, reg.takes);
  if (config.endgame && view.opp_can_win && opp_nil) {
    reg = EvaluateRegular(ctx.hand, ctx.prev_bids, cut_opponents, -0.5);
    t.endgame_rule = EndgameRule::kSetNiler;
  }
  t.regular = reg;

  t.nil_value = NilValue(ctx.hand);
  t.nil_prob = curves ? curves->Lookup(std::span<const Bid>(ctx.prev_bids), t.nil_value) : t.nil_value;
  t.exp_nil_score = 100.0 * t.nil_prob - 100.0 * (1.0 - t.nil_prob);

  t.threshold = config.nil_threshold;
  if (config.conventions && PartnerSignal(ctx) != Convention::kNone) {
    t.signal_seen = true;
    t.threshold = std::min(t.threshold, config.signal_threshold);
  }

  bool want_nil = t.exp_nil_score > t.threshold;
  if (config.explore_rate > 0 && explore && explore->Bernoulli(config.explore_rate)) {
    want_nil = !want_nil;
    t.explored = true;
  }
  if (partner_nil) want_nil = false;

  int regular = reg.takes;
  const int prev_sum = SumValues(ctx.prev_bids);
  if (config.endgame && !t.explored) {
    view = ProjectEndgame(ctx, regular);
    if (view.opp_can_win && t.endgame_rule != EndgameRule::kSetNiler) {
      const int gap = view.opp_projected - view.own_projected;
      if (ctx.position() == kNumSeats && !AnyNil(ctx.prev_bids) && !want_nil &&
          prev_sum + regular >= kEasyContract) {
        regular = std::clamp(kCompleteTotal - prev_sum, 1, kMaxBid);
        t.endgame_rule = EndgameRule::kCompleteTo14;
      } else if (!want_nil && ctx.position() == kNumSeats && gap >= 0 && gap < kOvertakeMargin) {
        // Only the last bidder knows every contract it has to beat.
        const int base = regular;
        while (regular < std::min(base + kMaxOvertake, kMaxBid) &&
               ProjectEndgame(ctx, regular).own_projected <= view.opp_projected) {
          ++regular;
        }
        if (regular != base) t.endgame_rule = EndgameRule::kOvertake;
      } else if (!want_nil && !partner_nil && gap >= kOvertakeMargin &&
                 t.nil_prob >= config.risky_nil_floor) {
        want_nil = true;
        t.endgame_rule = EndgameRule::kRiskyNil;
      }
    }
    if (view.own_can_win && ctx.position() == kNumSeats && t.endgame_rule == EndgameRule::kNone) {
      if (want_nil) {
        const EndgameView reg_view = ProjectEndgame(ctx, regular);
        if (reg_view.own_can_win && reg_view.own_projected > reg_view.opp_projected) {
          want_nil = false;
          t.endgame_rule = EndgameRule::kSkipNil;
        }
      } else if (regular > 1) {
        const EndgameView less = ProjectEndgame(ctx, regular - 1);
        if (less.own_can_win && less.own_projected - less.opp_projected > kConservativeMargin &&
            ctx.own_bags() + kBagHeadroom < kBagLimit) {
          --regular;
          t.endgame_rule = EndgameRule::kConservative;
        }
      }
    }
  }

  if (want_nil) {
    t.bid = Bid::Nil();
    return t.bid;
  }

  // First partner to bid: the reserved bid is a signal and nothing else.
  if (config.conventions && ctx.partner_is_bis && !ctx.partner_bid() &&
      t.endgame_rule == EndgameRule::kNone) {
    const Convention active = ActiveConvention(ctx);
    const int reserved = ReservedBid(active);
    const bool meets = active == Convention::kBigSix ? MeetsBigSix(ctx.hand, regular)
                                                     : MeetsBigFive(ctx.hand, regular);
    if (meets) {
      regular = reserved;
      t.signal_sent = active;
    } else if (regular == reserved) {
      regular = reserved - 1;
    }
  }
  t.bid = Bid::Regular(regular);
  return t.bid;
}

bool DecideBlindNil(const BidContext& ctx, const BisConfig& config) {
  if (!config.blind_nil || !ctx.blind_allowed || ctx.partner_bid_nil()) return false;
  if (config.conventions && PartnerSignal(ctx) == Convention::kBigSix) return true;
  if (ctx.position() != kNumSeats || AnyNil(ctx.prev_bids)) return false;
  const std::vector<Bid> opp = ctx.opponent_bids();
  const int opp_contract = SumValues(opp);
  const bool opp_win_on_make = ctx.opp_points() + 10 * opp_contract >= ctx.goals.win;
  return opp_win_on_make && SumValues(ctx.prev_bids) < kEasyContract;
}

BisBidder::BisBidder(BisConfig config, std::shared_ptr<const sc::SCTable> curves)
    : config_(std::move(config)), curves_(std::move(curves)) {}

void BisBidder::BeginRound(std::uint64_t seed, Seat) { rng_.Reseed(seed); }

bool BisBidder::ChooseBlindNil(const BidContext& ctx) { return DecideBlindNil(ctx, config_); }

Bid BisBidder::ChooseBid(const BidContext& ctx) {
  return DecideBid(ctx, config_, curves_.get(), &rng_, &trace_);
}

}  // namespace spades::bis
