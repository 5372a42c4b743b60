#include "spades/engine/scoring.h"

#include <numeric>

namespace spades {

RoundScore ScoreRound(const std::array<Bid, kNumSeats>& bids,
                      const std::array<int, kNumSeats>& tricks_taken,
                      const std::array<int, 2>& bags_before) {
  if (std::accumulate(tricks_taken.begin(), tricks_taken.end(), 0) != kTricksPerRound) {
    throw RuleViolation("tricks taken must sum to 13");
  }
  for (int i = 0; i < kNumSeats; ++i) {
    if (!bids[i].valid()) throw RuleViolation("invalid bid");
    if (tricks_taken[i] < 0) throw RuleViolation("negative trick count");
  }

  RoundScore out;
  for (int p = 0; p < 2; ++p) {
    PartnershipRoundScore& s = out.side[p];
    for (int k = 0; k < 2; ++k) {
      const int seat = p + 2 * k;
      const Bid& bid = bids[seat];
      s.tricks += tricks_taken[seat];
      if (bid.is_nil()) {
        const int reward = bid.blind ? kBlindNilReward : kNilReward;
        s.nil_points[k] = tricks_taken[seat] == 0 ? reward : -reward;
      } else {
        s.combined_bid += bid.value;
      }
    }
    if (s.tricks >= s.combined_bid) {
      s.contract_made = true;
      s.overtricks = s.tricks - s.combined_bid;
      s.contract_points = 10 * s.combined_bid + s.overtricks;
    } else {
      s.contract_made = false;
      s.contract_points = -10 * s.combined_bid;
    }
    int bags = bags_before[p] + s.overtricks;
    if (bags >= kBagLimit) {
      bags -= kBagLimit;
      s.bag_penalty = -kBagPenalty;
      s.bag_removal = -kBagLimit;
    }
    s.bags_after = bags;
    s.points_delta =
        s.contract_points + s.nil_points[0] + s.nil_points[1] + s.bag_penalty + s.bag_removal;
  }
  return out;
}

GameScore ApplyRoundScore(const GameScore& before, const RoundScore& round) {
  GameScore after = before;
  for (int p = 0; p < 2; ++p) {
    after.points[p] += round.side[p].points_delta;
    after.bags[p] = round.side[p].bags_after;
  }
  return after;
}

std::optional<Partnership> GameWinner(const GameScore& score, const GameGoals& goals) {
  const bool crossed = score.points[0] >= goals.win || score.points[1] >= goals.win ||
                       score.points[0] <= goals.lose || score.points[1] <= goals.lose;
  if (!crossed || score.points[0] == score.points[1]) return std::nullopt;
  return score.points[0] > score.points[1] ? Partnership::kNorthSouth : Partnership::kEastWest;
}

}  // namespace spades
