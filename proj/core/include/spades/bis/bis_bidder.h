#pragma once

#include <memory>
#include <string>

#include "spades/bis/hand_eval.h"
#include "spades/engine/agent.h"
#include "spades/engine/rng.h"
#include "spades/sc/sc_table.h"

namespace spades::bis {

struct BisConfig {
  double nil_threshold = 25.0;
  bool conventions = true;
  bool endgame = true;
  bool blind_nil = true;
  // Threshold used after the partner signalled a good covering hand.
  double signal_threshold = 0.0;
  // Lower edge of a "risky but doable" nil for the trailing end-game rule;
  // the upper edge is where the normal threshold would accept the nil.
  double risky_nil_floor = 0.35;
  // Probability of flipping the nil decision (noisy variant for data
  // collection). Never flips into a nil when the partner bid nil.
  double explore_rate = 0.0;
  std::string name = "bis";
};

enum class Convention { kNone, kBigFive, kBigSix };

// Big 6 replaces Big 5 when the partnership trails by more than 100 points.
Convention ActiveConvention(const BidContext& ctx);
inline constexpr int ReservedBid(Convention c) { return c == Convention::kBigSix ? 6 : 5; }
bool MeetsBigFive(CardSet hand, int takes);
bool MeetsBigSix(CardSet hand, int takes);

// Projected running totals if every contract is made; bids not yet made are
// assumed to be 3.
struct EndgameView {
  int own_projected = 0;
  int opp_projected = 0;
  bool own_can_win = false;
  bool opp_can_win = false;
};
EndgameView ProjectEndgame(const BidContext& ctx, int own_bid);

enum class EndgameRule {
  kNone,
  kSetNiler,          // opponents bid nil: shave half a trick
  kCompleteTo14,      // push the total to 14
  kOvertake,          // last bidder, small deficit: bid up to two more
  kRiskyNil,          // larger deficit: bid a doable nil
  kSkipNil,           // regular bid already wins
  kConservative,      // win with one trick less
};

struct BidTrace {
  RegularEvaluation regular;
  double nil_value = 0.0;
  double nil_prob = 0.0;
  double exp_nil_score = 0.0;
  double threshold = 0.0;
  bool explored = false;
  bool signal_seen = false;
  Convention signal_sent = Convention::kNone;
  EndgameRule endgame_rule = EndgameRule::kNone;
  Bid bid;
};

// The full bid decision. `curves` may be null, in which case nilProb equals
// nilValue. `explore` is consulted only when config.explore_rate > 0.
Bid DecideBid(const BidContext& ctx, const BisConfig& config, const sc::SCTable* curves,
              Rng* explore = nullptr, BidTrace* trace = nullptr);

// Asked before the hand is seen: blind nil after the partner's Big 6 signal
// or when the opponents are about to win with an easy contract.
bool DecideBlindNil(const BidContext& ctx, const BisConfig& config);

class BisBidder : public Bidder {
 public:
  BisBidder(BisConfig config, std::shared_ptr<const sc::SCTable> curves);

  std::string name() const override { return config_.name; }
  void BeginRound(std::uint64_t seed, Seat seat) override;
  bool ChooseBlindNil(const BidContext& ctx) override;
  Bid ChooseBid(const BidContext& ctx) override;

  const BidTrace& last_trace() const { return trace_; }
  const BisConfig& config() const { return config_; }

 private:
  BisConfig config_;
  std::shared_ptr<const sc::SCTable> curves_;
  Rng rng_;
  BidTrace trace_;
};

}  // namespace spades::bis
