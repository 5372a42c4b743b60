#pragma once

#include <array>
#include <optional>

#include "spades/engine/round_state.h"
#include "spades/engine/seat.h"

namespace spades {

inline constexpr int kBagLimit = 10;
inline constexpr int kBagPenalty = 100;
inline constexpr int kNilReward = 100;
inline constexpr int kBlindNilReward = 200;

struct GameGoals {
  int win = 200;
  int lose = -100;
};

struct GameScore {
  std::array<int, 2> points{};
  std::array<int, 2> bags{};

  int points_of(Partnership p) const { return points[Index(p)]; }
  int bags_of(Partnership p) const { return bags[Index(p)]; }
  friend bool operator==(const GameScore&, const GameScore&) = default;
};

// One partnership's share of a round. Bags count one point each and are part
// of the running score, so a bag-back removes those ten points as well as the
// 100-point penalty.
struct PartnershipRoundScore {
  int combined_bid = 0;   // sum of the non-nil bids
  int tricks = 0;         // pooled tricks of both partners
  bool contract_made = true;
  int contract_points = 0;
  int overtricks = 0;
  std::array<int, 2> nil_points{};  // per partner; index 0 is the N or E seat
  int bag_penalty = 0;              // -100 on a bag-back
  int bag_removal = 0;              // -10 on a bag-back
  int points_delta = 0;
  int bags_after = 0;
};

struct RoundScore {
  std::array<PartnershipRoundScore, 2> side;
  const PartnershipRoundScore& of(Partnership p) const { return side[Index(p)]; }
};

// Throws RuleViolation unless the tricks sum to 13 and every bid is valid.
RoundScore ScoreRound(const std::array<Bid, kNumSeats>& bids,
                      const std::array<int, kNumSeats>& tricks_taken,
                      const std::array<int, 2>& bags_before);

GameScore ApplyRoundScore(const GameScore& before, const RoundScore& round);

// The winner once a goal is crossed; higher score wins. Returns nullopt while
// the game continues, including an exact tie after a crossing.
std::optional<Partnership> GameWinner(const GameScore& score, const GameGoals& goals);

}  // namespace spades
