#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "spades/engine/rng.h"

namespace spades::tables {

// The three hidden hands, seen from the agent. Opponent-only tables count the
// first 1, 2 or 3 players in this order.
enum class Holder : int { kLeftOpponent = 0, kRightOpponent = 1, kPartner = 2 };
inline constexpr int kNumHolders = 3;
inline constexpr int kSlotsPerHolder = 13;
inline constexpr int kUnseenSlots = kNumHolders * kSlotsPerHolder;
inline constexpr int kMaxBands = 4;

// Exact probability with the fixed denominator 39!/(13!)^3 reduced by gcd.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational Make(std::uint64_t num, std::uint64_t den);
  double ToDouble() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string ToString() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::uint64_t Binomial(int n, int k);

// Number of ways to split the 39 unseen cards into three 13-card hands.
std::uint64_t TotalPlacements();

// Per-holder count of suit cards in each rank band. Bands partition the
// remaining cards of the suit; callers decide what a band means.
struct BandCounts {
  std::array<int, kMaxBands> n{};

  int total() const { return n[0] + n[1] + n[2] + n[3]; }
  // Cards in bands [0, band).
  int below(int band) const {
    int s = 0;
    for (int b = 0; b < band; ++b) s += n[b];
    return s;
  }
  // Cards in bands [band, kMaxBands).
  int from(int band) const { return total() - below(band); }
};
using Placement = std::array<BandCounts, kNumHolders>;
using PlacementPredicate = std::function<bool(const Placement&)>;

// Probability that `pred` holds when the cards of each band are dealt
// uniformly at random into the 39 unseen slots. Band sizes must sum to at
// most 39. An unsatisfiable predicate yields 0.
Rational ExactPlacementProbability(std::span<const int> band_sizes, const PlacementPredicate& pred);

// Single-band convenience: `remaining` suit cards, predicate on holder counts.
Rational ExactPlacementProbability(int remaining,
                                   const std::function<bool(const std::array<int, 3>&)>& pred);

// Deals band cards into the unseen slots uniformly.
class DealSampler {
 public:
  explicit DealSampler(std::uint64_t seed) : rng_(seed) {}
  Placement Sample(std::span<const int> band_sizes);
  Rng& rng() { return rng_; }

 private:
  Rng rng_;
};

struct Estimate {
  double p = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

Estimate MonteCarloPlacementProbability(std::span<const int> band_sizes,
                                        const PlacementPredicate& pred, int samples,
                                        DealSampler& sampler);

}  // namespace spades::tables
