#include "spades/tables/cut_table.h"

#include <cmath>
#include <stdexcept>

#include "spades/tables/placement.h"

namespace spades::tables {
namespace {

constexpr int kSuitSize = 13;

bool AllCountedHoldMore(const std::array<int, 3>& counts, int opponents, int k) {
  for (int i = 0; i < opponents; ++i) {
    if (counts[i] <= k) return false;
  }
  return true;
}

}  // namespace

std::string ModeName(Mode mode) {
  switch (mode) {
    case Mode::kExact:
      return "exact";
    case Mode::kMonteCarlo:
      return "mc";
    case Mode::kReference:
      return "reference";
  }
  return "exact";
}

Mode ModeFromName(const std::string& name) {
  if (name == "exact") return Mode::kExact;
  if (name == "mc" || name == "monte_carlo") return Mode::kMonteCarlo;
  if (name == "reference") return Mode::kReference;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

CutTable::CutTable(int opponents, Mode mode, std::vector<std::array<double, kCutColumns>> rows)
    : opponents_(opponents), mode_(mode), rows_(std::move(rows)) {
  if (opponents < 1 || opponents > 3) throw std::invalid_argument("opponents must be 1, 2 or 3");
}

double CutTable::entry(int m, int k) const {
  if (k < 0 || k >= kCutColumns) throw std::out_of_range("cut column out of range");
  if (m < 0) throw std::out_of_range("negative suit length");
  if (m >= rows()) return 0.0;
  return rows_[m][k];
}

CutTable BuildCutTable(int opponents, const BuildOptions& options) {
  if (opponents < 1 || opponents > 3) throw std::invalid_argument("opponents must be 1, 2 or 3");
  std::vector<std::array<double, kCutColumns>> rows(kSuitSize + 1);
  std::vector<std::array<std::string, kCutColumns>> text;
  std::vector<std::array<double, kCutColumns>> errors;

  if (options.mode == Mode::kExact) {
    text.resize(kSuitSize + 1);
    for (int m = 0; m <= kSuitSize; ++m) {
      for (int k = 0; k < kCutColumns; ++k) {
        const Rational r = ExactPlacementProbability(
            kSuitSize - m, [&](const std::array<int, 3>& c) { return AllCountedHoldMore(c, opponents, k); });
        rows[m][k] = r.ToDouble();
        text[m][k] = r.ToString();
      }
    }
  } else if (options.mode == Mode::kMonteCarlo) {
    if (options.samples < 10000) throw std::invalid_argument("Monte-Carlo needs at least 10^4 samples");
    errors.resize(kSuitSize + 1);
    DealSampler sampler(options.seed);
    for (int m = 0; m <= kSuitSize; ++m) {
      // One pass per row estimates all three columns from the same deals.
      const std::array<int, 1> sizes{kSuitSize - m};
      std::array<int, kCutColumns> hits{};
      for (int s = 0; s < options.samples; ++s) {
        const Placement p = sampler.Sample(sizes);
        const std::array<int, 3> c{p[0].total(), p[1].total(), p[2].total()};
        for (int k = 0; k < kCutColumns; ++k) hits[k] += AllCountedHoldMore(c, opponents, k) ? 1 : 0;
      }
      for (int k = 0; k < kCutColumns; ++k) {
        const double p = static_cast<double>(hits[k]) / options.samples;
        rows[m][k] = p;
        errors[m][k] = std::sqrt(p * (1 - p) / options.samples);
      }
    }
  } else {
    throw std::invalid_argument("reference tables are loaded, not built");
  }

  CutTable table(opponents, options.mode, std::move(rows));
  table.exact_text = std::move(text);
  table.std_errors = std::move(errors);
  table.samples = options.mode == Mode::kMonteCarlo ? options.samples : 0;
  table.seed = options.mode == Mode::kMonteCarlo ? options.seed : 0;
  return table;
}

const CutTable& StandardCutTable(int opponents) {
  static const std::array<CutTable, 3> tables{BuildCutTable(1), BuildCutTable(2), BuildCutTable(3)};
  if (opponents < 1 || opponents > 3) throw std::invalid_argument("opponents must be 1, 2 or 3");
  return tables[opponents - 1];
}

nlohmann::json ToJson(const CutTable& table) {
  nlohmann::json j;
  j["kind"] = "cut";
  j["opponents"] = table.opponents();
  j["mode"] = ModeName(table.mode());
  if (table.mode() == Mode::kMonteCarlo) {
    j["samples"] = table.samples;
    j["seed"] = table.seed;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 0; m < table.rows(); ++m) {
    rows.push_back({table.entry(m, 0), table.entry(m, 1), table.entry(m, 2)});
  }
  j["entries"] = rows;
  if (!table.exact_text.empty()) j["exact"] = table.exact_text;
  if (!table.std_errors.empty()) j["std_errors"] = table.std_errors;
  return j;
}

CutTable CutTableFromJson(const nlohmann::json& j) {
  if (j.value("kind", "cut") != "cut") throw std::invalid_argument("not a cut table");
  std::vector<std::array<double, kCutColumns>> rows;
  for (const auto& r : j.at("entries")) rows.push_back(r.get<std::array<double, kCutColumns>>());
  CutTable t(j.at("opponents").get<int>(), ModeFromName(j.value("mode", "exact")), std::move(rows));
  if (j.contains("exact")) {
    t.exact_text = j.at("exact").get<std::vector<std::array<std::string, kCutColumns>>>();
  }
  if (j.contains("std_errors")) {
    t.std_errors = j.at("std_errors").get<std::vector<std::array<double, kCutColumns>>>();
  }
  t.samples = j.value("samples", 0);
  t.seed = j.value("seed", std::uint64_t{0});
  return t;
}

std::vector<CellDiff> DiffCutTables(const CutTable& a, const CutTable& b, double tol) {
  if (a.opponents() != b.opponents()) throw std::invalid_argument("tables count different opponents");
  std::vector<CellDiff> out;
  const int rows = std::min(a.rows(), b.rows());
  for (int m = 0; m < rows; ++m) {
    for (int k = 0; k < kCutColumns; ++k) {
      if (std::abs(a.entry(m, k) - b.entry(m, k)) > tol) out.push_back({m, k, a.entry(m, k), b.entry(m, k)});
    }
  }
  return out;
}

}  // namespace spades::tables
