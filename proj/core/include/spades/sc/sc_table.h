#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/engine/round_state.h"

namespace spades::sc {

inline constexpr int kGridPoints = 101;  // nilValue 0.00, 0.01, ..., 1.00
inline constexpr int kBidValues = kMaxBid + 1;
inline constexpr int kNumSequences = 1 + kBidValues + kBidValues * kBidValues +
                                     kBidValues * kBidValues * kBidValues;  // 2955

using Curve = std::array<double, kGridPoints>;

// Dense index of a sequence of 0..3 previous bid values.
int SequenceIndex(std::span<const int> values);
std::vector<int> SequenceAt(int index);
// "" for no previous bids, otherwise values joined by '-', e.g. "1-3".
std::string SequenceKey(std::span<const int> values);
std::vector<int> SequenceFromKey(const std::string& key);
std::vector<int> BidValues(std::span<const Bid> bids);

int GridIndex(double nil_value);

// Success curves for every bidding sequence.
class SCTable {
 public:
  SCTable();

  // Curve of each sequence is the identity: nilProb = nilValue.
  static SCTable Identity();

  double Lookup(std::span<const int> sequence, double nil_value) const;
  double Lookup(std::span<const Bid> prev_bids, double nil_value) const;
  const Curve& curve(int index) const { return curves_[index]; }
  Curve& mutable_curve(int index) { return curves_[index]; }

  // Raises each curve to its running maximum so it is non-decreasing.
  void MakeMonotone();

  std::string source;  // free-form provenance, e.g. "identity" or a dataset path

 private:
  std::vector<Curve> curves_;
};

nlohmann::json ToJson(const SCTable& table);
SCTable SCTableFromJson(const nlohmann::json& j);
SCTable LoadSCTable(const std::string& path);
void SaveSCTable(const SCTable& table, const std::string& path);

}  // namespace spades::sc
