#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace spades::tables {

enum class Mode { kExact, kMonteCarlo, kReference };

std::string ModeName(Mode mode);
Mode ModeFromName(const std::string& name);

struct BuildOptions {
  Mode mode = Mode::kExact;
  int samples = 100000;
  std::uint64_t seed = 0;
};

inline constexpr int kCutColumns = 3;

// entry(m, k): probability that every counted opponent holds more than k
// cards of a side suit when the agent holds m of them.
class CutTable {
 public:
  CutTable() = default;
  CutTable(int opponents, Mode mode, std::vector<std::array<double, kCutColumns>> rows);

  int opponents() const { return opponents_; }
  Mode mode() const { return mode_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  double entry(int m, int k) const;

  // The high card needs m > k blockers to be played on trick k + 1.
  static bool Parenthesized(int m, int k) { return m <= k; }
  // Entry when the card can be played on that trick, 0 otherwise.
  double BiddingValue(int m, int k) const { return Parenthesized(m, k) ? 0.0 : entry(m, k); }

  // Rationals for exact builds, standard errors for Monte-Carlo builds.
  std::vector<std::array<std::string, kCutColumns>> exact_text;
  std::vector<std::array<double, kCutColumns>> std_errors;
  int samples = 0;
  std::uint64_t seed = 0;

 private:
  int opponents_ = 2;
  Mode mode_ = Mode::kExact;
  std::vector<std::array<double, kCutColumns>> rows_;
};

// Rows m = 0..13. Throws std::invalid_argument for opponents outside 1..3 or
// fewer than 10^4 Monte-Carlo samples.
CutTable BuildCutTable(int opponents, const BuildOptions& options = {});

// The exact tables for 1, 2 and 3 opponents, computed once.
const CutTable& StandardCutTable(int opponents);

nlohmann::json ToJson(const CutTable& table);
CutTable CutTableFromJson(const nlohmann::json& j);

struct CellDiff {
  int m;
  int k;
  double a;
  double b;
};

// Cells present in both tables whose values differ by more than `tol`.
std::vector<CellDiff> DiffCutTables(const CutTable& a, const CutTable& b, double tol);

}  // namespace spades::tables
