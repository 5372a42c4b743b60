#include "spades/tables/placement.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spades::tables {
namespace {

using u128 = unsigned __int128;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kUnseenSlots + 1>, kUnseenSlots + 1> c{};
  BinomialTable() {
    for (int n = 0; n <= kUnseenSlots; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& Binomials() {
  static const BinomialTable table;
  return table;
}

class Enumerator {
 public:
  Enumerator(std::span<const int> sizes, const PlacementPredicate& pred)
      : sizes_(sizes), pred_(pred) {}

  std::uint64_t Run() {
    Recurse(0, 1);
    return static_cast<std::uint64_t>(count_);
  }

 private:
  void Recurse(std::size_t band, u128 ways) {
    if (band == sizes_.size()) {
      const int a = placement_[0].total();
      const int b = placement_[1].total();
      const int c = placement_[2].total();
      if (a > kSlotsPerHolder || b > kSlotsPerHolder || c > kSlotsPerHolder) return;
      if (!pred_(placement_)) return;
      const int r = a + b + c;
      const auto& bin = Binomials().c;
      count_ += ways * bin[kUnseenSlots - r][kSlotsPerHolder - a] *
                bin[2 * kSlotsPerHolder - r + a][kSlotsPerHolder - b];
      return;
    }
    const int s = sizes_[band];
    const auto& bin = Binomials().c;
    for (int a = 0; a <= s; ++a) {
      for (int b = 0; a + b <= s; ++b) {
        placement_[0].n[band] = a;
        placement_[1].n[band] = b;
        placement_[2].n[band] = s - a - b;
        Recurse(band + 1, ways * bin[s][a] * bin[s - a][b]);
      }
    }
    placement_[0].n[band] = placement_[1].n[band] = placement_[2].n[band] = 0;
  }

  std::span<const int> sizes_;
  const PlacementPredicate& pred_;
  Placement placement_{};
  u128 count_ = 0;
};

void CheckBands(std::span<const int> band_sizes) {
  if (band_sizes.size() > kMaxBands) throw std::invalid_argument("too many bands");
  int total = 0;
  for (int s : band_sizes) {
    if (s < 0) throw std::invalid_argument("negative band size");
    total += s;
  }
  if (total > kUnseenSlots) throw std::invalid_argument("more than 39 cards to place");
}

}  // namespace

Rational Rational::Make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::uint64_t Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kUnseenSlots) throw std::out_of_range("binomial table holds n <= 39");
  return Binomials().c[n][k];
}

std::uint64_t TotalPlacements() {
  return Binomial(kUnseenSlots, kSlotsPerHolder) * Binomial(2 * kSlotsPerHolder, kSlotsPerHolder);
}

Rational ExactPlacementProbability(std::span<const int> band_sizes, const PlacementPredicate& pred) {
  CheckBands(band_sizes);
  Enumerator e(band_sizes, pred);
  return Rational::Make(e.Run(), TotalPlacements());
}

Rational ExactPlacementProbability(int remaining,
                                   const std::function<bool(const std::array<int, 3>&)>& pred) {
  const std::array<int, 1> sizes{remaining};
  return ExactPlacementProbability(sizes, [&](const Placement& p) {
    return pred({p[0].total(), p[1].total(), p[2].total()});
  });
}

Placement DealSampler::Sample(std::span<const int> band_sizes) {
  // Partial Fisher-Yates over the 39 slots: the first r positions receive the
  // band cards in order.
  std::array<std::uint8_t, kUnseenSlots> slots;
  std::iota(slots.begin(), slots.end(), 0);
  Placement out{};
  int pos = 0;
  for (std::size_t band = 0; band < band_sizes.size(); ++band) {
    for (int i = 0; i < band_sizes[band]; ++i, ++pos) {
      const auto j = pos + static_cast<int>(rng_.Below(static_cast<std::uint64_t>(kUnseenSlots - pos)));
      std::swap(slots[pos], slots[j]);
      ++out[slots[pos] / kSlotsPerHolder].n[band];
    }
  }
  return out;
}

Estimate MonteCarloPlacementProbability(std::span<const int> band_sizes,
                                        const PlacementPredicate& pred, int samples,
                                        DealSampler& sampler) {
  CheckBands(band_sizes);
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  int hits = 0;
  for (int i = 0; i < samples; ++i) hits += pred(sampler.Sample(band_sizes)) ? 1 : 0;
  Estimate e;
  e.samples = samples;
  e.p = static_cast<double>(hits) / samples;
  e.std_error = std::sqrt(e.p * (1.0 - e.p) / samples);
  return e;
}

}  // namespace spades::tables
