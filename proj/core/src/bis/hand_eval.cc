#include "spades/bis/hand_eval.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "spades/tables/cnil_table.h"
#include "spades/tables/cut_table.h"

namespace spades::bis {
namespace {

constexpr std::array<int, 4> kSpadeHonors{rank::kAce, rank::kKing, rank::kQueen, rank::kJack};
constexpr int kLongSpadesFrom = 4;
constexpr double kPerBidderShare = 2.6;
constexpr double kExpectedTotal = 11.0;

}  // namespace

bool MostlyProtected(CardSet hand, int r) {
  const std::uint16_t spades = hand.RankMask(Suit::kSpades);
  if (!((spades >> r) & 1U)) return false;
  int unowned_higher = 0;
  for (int h = r + 1; h < kNumRanks; ++h) unowned_higher += ((spades >> h) & 1U) ? 0 : 1;
  return std::popcount(spades) > unowned_higher;
}

double SpadeHighAndLong(CardSet hand) {
  double v = 0.0;
  for (int r : kSpadeHonors) v += MostlyProtected(hand, r) ? 1.0 : 0.0;
  v += std::max(0, hand.CountInSuit(Suit::kSpades) - kLongSpadesFrom);
  return v;
}

double ShortSuitCutValue(CardSet hand, int spares, int cut_opponents) {
  if (spares <= 0) return 0.0;
  const tables::CutTable& t = tables::StandardCutTable(cut_opponents);
  std::vector<double> chances;
  for (Suit s : kSideSuits) {
    const int len = hand.CountInSuit(s);
    for (int k = len; k < tables::kCutColumns; ++k) chances.push_back(t.entry(len, k));
  }
  std::sort(chances.begin(), chances.end(), std::greater<>());
  const int n = std::min<int>(spares, static_cast<int>(chances.size()));
  return std::accumulate(chances.begin(), chances.begin() + n, 0.0);
}

double SideSuitHighCards(CardSet hand, int cut_opponents) {
  const tables::CutTable& t = tables::StandardCutTable(cut_opponents);
  double v = 0.0;
  for (Suit s : kSideSuits) {
    const std::uint16_t mask = hand.RankMask(s);
    const int len = std::popcount(mask);
    // A, K, Q win the first, second, third trick of the suit.
    for (int k = 0; k < tables::kCutColumns; ++k) {
      if ((mask >> (rank::kAce - k)) & 1U) v += t.BiddingValue(len, k);
    }
  }
  return v;
}

double PrevBidsFactor(std::span<const Bid> prev_bids, double raw) {
  const int n = static_cast<int>(prev_bids.size());
  if (n == 0) return 0.0;
  int sum = 0;
  for (const Bid& b : prev_bids) sum += b.value;
  if (sum <= kPerBidderShare * n) return 0.0;
  const double projected = sum + raw + kPerBidderShare * (3 - n);
  return std::clamp(-0.5 * std::max(0.0, projected - kExpectedTotal), -1.0, 1.0);
}

RegularEvaluation EvaluateRegular(CardSet hand, std::span<const Bid> prev_bids, int cut_opponents,
                                  double extra_adjustment) {
  RegularEvaluation e;
  e.side_high_cards = SideSuitHighCards(hand, cut_opponents);

  const std::uint16_t spades = hand.RankMask(Suit::kSpades);
  int sure = 0;
  for (int r = rank::kAce; r >= 0 && ((spades >> r) & 1U); --r) ++sure;
  const int spares = std::popcount(spades) - sure;
  e.spade_sure = sure;
  e.spade_high_long = SpadeHighAndLong(hand) - sure;
  e.spade_cuts = ShortSuitCutValue(hand, spares, cut_opponents);
  e.spade_value = e.spade_sure + std::max(e.spade_high_long, e.spade_cuts);

  e.raw = e.side_high_cards + e.spade_value;
  e.prev_bids_factor = PrevBidsFactor(prev_bids, e.raw);
  const double adjusted = e.raw + e.prev_bids_factor + extra_adjustment;
  e.takes = std::clamp(static_cast<int>(std::floor(adjusted + 0.5)), 1, kMaxBid);
  return e;
}

double NilValue(CardSet hand) {
  const auto& side = tables::StandardCNilTable(tables::SuitKind::kSide);
  const auto& spades = tables::StandardCNilTable(tables::SuitKind::kSpades);
  double v = 1.0;
  bool has_void = false;
  for (Suit s : kAllSuits) {
    const std::uint16_t mask = hand.RankMask(s);
    has_void = has_void || mask == 0;
    v *= s == Suit::kSpades ? spades.Probability(mask) : side.Probability(mask);
  }
  return has_void ? std::min(1.0, v * kVoidNilFactor) : v;
}

}  // namespace spades::bis
