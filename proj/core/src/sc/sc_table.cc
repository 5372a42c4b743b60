#include "spades/sc/sc_table.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spades::sc {
namespace {

constexpr std::array<int, 4> kOffsets{0, 1, 1 + kBidValues, 1 + kBidValues + kBidValues * kBidValues};

void CheckValue(int v) {
  if (v < 0 || v > kMaxBid) throw std::invalid_argument("bid value out of range");
}

}  // namespace

int SequenceIndex(std::span<const int> values) {
  if (values.size() > 3) throw std::invalid_argument("at most three previous bids");
  int code = 0;
  for (int v : values) {
    CheckValue(v);
    code = code * kBidValues + v;
  }
  return kOffsets[values.size()] + code;
}

std::vector<int> SequenceAt(int index) {
  if (index < 0 || index >= kNumSequences) throw std::out_of_range("sequence index");
  int len = 3;
  while (index < kOffsets[len]) --len;
  int code = index - kOffsets[len];
  std::vector<int> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = code % kBidValues;
    code /= kBidValues;
  }
  return out;
}

std::string SequenceKey(std::span<const int> values) {
  std::string key;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) key += '-';
    key += std::to_string(values[i]);
  }
  return key;
}

std::vector<int> SequenceFromKey(const std::string& key) {
  std::vector<int> out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '-')) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad sequence key '" + key + "'");
    CheckValue(v);
    out.push_back(v);
  }
  if (out.size() > 3) throw std::invalid_argument("bad sequence key '" + key + "'");
  return out;
}

std::vector<int> BidValues(std::span<const Bid> bids) {
  std::vector<int> out;
  out.reserve(bids.size());
  for (const Bid& b : bids) out.push_back(b.value);
  return out;
}

int GridIndex(double nil_value) {
  const double clamped = std::clamp(nil_value, 0.0, 1.0);
  return static_cast<int>(std::lround(clamped * (kGridPoints - 1)));
}

SCTable::SCTable() : curves_(kNumSequences) {
  for (Curve& c : curves_) c.fill(0.0);
}

SCTable SCTable::Identity() {
  SCTable t;
  for (int i = 0; i < kNumSequences; ++i) {
    for (int g = 0; g < kGridPoints; ++g) t.curves_[i][g] = static_cast<double>(g) / (kGridPoints - 1);
  }
  t.source = "identity";
  return t;
}

double SCTable::Lookup(std::span<const int> sequence, double nil_value) const {
  return curves_[SequenceIndex(sequence)][GridIndex(nil_value)];
}

double SCTable::Lookup(std::span<const Bid> prev_bids, double nil_value) const {
  const std::vector<int> values = BidValues(prev_bids);
  return Lookup(values, nil_value);
}

void SCTable::MakeMonotone() {
  for (Curve& c : curves_) {
    for (int g = 1; g < kGridPoints; ++g) c[g] = std::max(c[g], c[g - 1]);
  }
}

nlohmann::json ToJson(const SCTable& table) {
  nlohmann::json curves = nlohmann::json::object();
  for (int i = 0; i < kNumSequences; ++i) {
    const std::vector<int> seq = SequenceAt(i);
    nlohmann::json arr = nlohmann::json::array();
    // Six decimals keep the file small and round-trip within 5e-7.
    for (double p : table.curve(i)) arr.push_back(std::round(p * 1e6) / 1e6);
    curves[SequenceKey(seq)] = arr;
  }
  return {{"kind", "success_curves"}, {"grid", kGridPoints}, {"source", table.source}, {"curves", curves}};
}

SCTable SCTableFromJson(const nlohmann::json& j) {
  if (j.value("grid", kGridPoints) != kGridPoints) throw std::invalid_argument("unexpected grid size");
  SCTable t;
  t.source = j.value("source", "");
  std::vector<bool> seen(kNumSequences, false);
  for (const auto& [key, arr] : j.at("curves").items()) {
    const int idx = SequenceIndex(SequenceFromKey(key));
    const auto values = arr.get<std::vector<double>>();
    if (values.size() != kGridPoints) throw std::invalid_argument("curve '" + key + "' has wrong length");
    std::copy(values.begin(), values.end(), t.mutable_curve(idx).begin());
    seen[idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("success curve table is missing sequences");
  }
  return t;
}

SCTable LoadSCTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return SCTableFromJson(nlohmann::json::parse(in));
}

void SaveSCTable(const SCTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << ToJson(table).dump() << "\n";
}

}  // namespace spades::sc
