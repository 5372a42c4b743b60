#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/tables/cut_table.h"
#include "spades/tables/placement.h"

namespace spades::tables {

enum class SuitKind { kSide, kSpades };

std::string SuitKindName(SuitKind kind);
SuitKind SuitKindFromName(const std::string& name);

// Spades holdings of this length or more always fail a nil.
inline constexpr int kSpadesNilLimit = 4;

// True when the placement sets a nil in this suit: on some trick of the suit
// both opponents can duck under one of the agent's three lowest cards and the
// partner cannot cover. `held` is the agent's length in the suit; bands of the
// placement split the remaining cards by how many of those three lowest cards
// rank below them.
bool NilIsSet(SuitKind kind, int held, const Placement& placement);

// Sizes of the remaining-card bands for a holding (13-bit rank mask) in a
// suit of `suit_size` ranks.
std::vector<int> HoldingBands(std::uint16_t holding, int suit_size = 13);

// Probability the agent's cards in the suit survive. Void -> 1; spades
// holdings of four or more -> 0.
Rational CNilExact(SuitKind kind, std::uint16_t holding, int suit_size = 13);
Estimate CNilMonteCarlo(SuitKind kind, std::uint16_t holding, int samples, DealSampler& sampler,
                        int suit_size = 13);

// Probability of a clean nil in one suit for every holding, keyed by the
// suit length and its three lowest ranks.
class CNilTable {
 public:
  struct Entry {
    int length = 0;
    std::vector<int> low;  // up to three lowest ranks
    double p = 0.0;
    std::string exact;  // rational text for exact builds
    double std_error = 0.0;
  };

  CNilTable() = default;
  CNilTable(SuitKind kind, Mode mode, const std::vector<Entry>& entries);

  SuitKind kind() const { return kind_; }
  Mode mode() const { return mode_; }
  const std::vector<Entry>& entries() const { return entries_; }

  double Probability(std::uint16_t holding) const;

  int samples = 0;
  std::uint64_t seed = 0;

 private:
  static std::size_t Key(int length, const std::vector<int>& low);

  SuitKind kind_ = SuitKind::kSide;
  Mode mode_ = Mode::kExact;
  std::vector<Entry> entries_;
  std::vector<int> index_;  // dense key -> entry, -1 when absent
};

// Every canonical holding: a representative 13-bit mask per table key.
std::vector<std::uint16_t> CanonicalHoldings(SuitKind kind);

CNilTable BuildCNilTable(SuitKind kind, const BuildOptions& options = {});

// Exact tables, computed once.
const CNilTable& StandardCNilTable(SuitKind kind);

nlohmann::json ToJson(const CNilTable& table);
CNilTable CNilTableFromJson(const nlohmann::json& j);

}  // namespace spades::tables
