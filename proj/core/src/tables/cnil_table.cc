#include "spades/tables/cnil_table.h"

#include <bit>
#include <stdexcept>

#include "spades/engine/card.h"

namespace spades::tables {
namespace {

constexpr int kLowCards = 3;

std::vector<int> LowestRanks(std::uint16_t holding, int count) {
  std::vector<int> out;
  for (int r = 0; r < kNumRanks && static_cast<int>(out.size()) < count; ++r) {
    if ((holding >> r) & 1U) out.push_back(r);
  }
  return out;
}

bool OpponentsDuck(const BandCounts& lho, const BandCounts& rho, int level) {
  for (const BandCounts* o : {&lho, &rho}) {
    if (!(o->total() <= level - 1 || o->below(level) >= level)) return false;
  }
  return true;
}

bool ShortCircuit(SuitKind kind, std::uint16_t holding, double* p) {
  if (holding == 0) {
    *p = 1.0;
    return true;
  }
  if (kind == SuitKind::kSpades && std::popcount(holding) >= kSpadesNilLimit) {
    *p = 0.0;
    return true;
  }
  return false;
}

}  // namespace

std::string SuitKindName(SuitKind kind) { return kind == SuitKind::kSide ? "side" : "spades"; }

SuitKind SuitKindFromName(const std::string& name) {
  if (name == "side") return SuitKind::kSide;
  if (name == "spades") return SuitKind::kSpades;
  throw std::invalid_argument("unknown suit kind '" + name + "'");
}

bool NilIsSet(SuitKind kind, int held, const Placement& placement) {
  if (held <= 0) return false;
  const BandCounts& lho = placement[static_cast<int>(Holder::kLeftOpponent)];
  const BandCounts& rho = placement[static_cast<int>(Holder::kRightOpponent)];
  const BandCounts& partner = placement[static_cast<int>(Holder::kPartner)];
  const bool side = kind == SuitKind::kSide;

  if (OpponentsDuck(lho, rho, 1) && (!side || partner.total() >= 1) && partner.from(1) == 0) {
    return true;
  }
  if (held >= 2 && OpponentsDuck(lho, rho, 2) && (!side || partner.total() >= 2) &&
      partner.from(2) < 2) {
    return true;
  }
  if (held >= 3 && OpponentsDuck(lho, rho, 3) && (!side || partner.total() >= 3) &&
      partner.from(3) == 0) {
    return true;
  }
  return false;
}

std::vector<int> HoldingBands(std::uint16_t holding, int suit_size) {
  if (suit_size < 1 || suit_size > kNumRanks) throw std::invalid_argument("bad suit size");
  if (holding >> suit_size) throw std::invalid_argument("holding outside the suit");
  const std::vector<int> low = LowestRanks(holding, kLowCards);
  std::vector<int> bands(low.size() + 1, 0);
  for (int r = 0; r < suit_size; ++r) {
    if ((holding >> r) & 1U) continue;
    int band = 0;
    while (band < static_cast<int>(low.size()) && low[band] < r) ++band;
    ++bands[band];
  }
  return bands;
}

Rational CNilExact(SuitKind kind, std::uint16_t holding, int suit_size) {
  double shortcut;
  if (ShortCircuit(kind, holding, &shortcut)) return Rational::Make(shortcut > 0 ? 1 : 0, 1);
  const std::vector<int> bands = HoldingBands(holding, suit_size);
  const int held = std::popcount(holding);
  const Rational set =
      ExactPlacementProbability(bands, [&](const Placement& p) { return NilIsSet(kind, held, p); });
  return Rational::Make(set.den - set.num, set.den);
}

Estimate CNilMonteCarlo(SuitKind kind, std::uint16_t holding, int samples, DealSampler& sampler,
                        int suit_size) {
  Estimate e;
  e.samples = samples;
  double shortcut;
  if (ShortCircuit(kind, holding, &shortcut)) {
    e.p = shortcut;
    return e;
  }
  const std::vector<int> bands = HoldingBands(holding, suit_size);
  const int held = std::popcount(holding);
  e = MonteCarloPlacementProbability(
      bands, [&](const Placement& p) { return !NilIsSet(kind, held, p); }, samples, sampler);
  return e;
}

CNilTable::CNilTable(SuitKind kind, Mode mode, const std::vector<Entry>& entries)
    : kind_(kind), mode_(mode), entries_(entries) {
  index_.assign(Key(kNumRanks, {kNumRanks - 1, kNumRanks - 1, kNumRanks - 1}) + 1, -1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[Key(entries_[i].length, entries_[i].low)] = static_cast<int>(i);
  }
}

std::size_t CNilTable::Key(int length, const std::vector<int>& low) {
  std::size_t key = static_cast<std::size_t>(length);
  for (int i = 0; i < kLowCards; ++i) {
    key = key * kNumRanks + (i < static_cast<int>(low.size()) ? low[i] : 0);
  }
  return key;
}

double CNilTable::Probability(std::uint16_t holding) const {
  double shortcut;
  if (ShortCircuit(kind_, holding, &shortcut)) return shortcut;
  const int length = std::popcount(holding);
  const int idx = index_.at(Key(length, LowestRanks(holding, kLowCards)));
  if (idx < 0) throw std::out_of_range("holding missing from cnil table");
  return entries_[idx].p;
}

std::vector<std::uint16_t> CanonicalHoldings(SuitKind kind) {
  std::vector<std::uint16_t> out;
  const int max_len = kind == SuitKind::kSpades ? kSpadesNilLimit - 1 : kNumRanks;
  for (int len = 1; len <= max_len; ++len) {
    const int lows = std::min(len, kLowCards);
    const int extra = len - lows;
    for (unsigned low = 1; low < (1U << kNumRanks); ++low) {
      if (std::popcount(low) != lows) continue;
      const int top = std::bit_width(low) - 1;
      if (kNumRanks - 1 - top < extra) continue;
      unsigned mask = low;
      for (int e = 0; e < extra; ++e) mask |= 1U << (kNumRanks - 1 - e);
      out.push_back(static_cast<std::uint16_t>(mask));
    }
  }
  return out;
}

CNilTable BuildCNilTable(SuitKind kind, const BuildOptions& options) {
  if (options.mode == Mode::kMonteCarlo && options.samples < 10000) {
    throw std::invalid_argument("Monte-Carlo needs at least 10^4 samples");
  }
  if (options.mode == Mode::kReference) throw std::invalid_argument("no reference cnil table");
  std::vector<CNilTable::Entry> entries;
  DealSampler sampler(options.seed);
  for (std::uint16_t mask : CanonicalHoldings(kind)) {
    CNilTable::Entry e;
    e.length = std::popcount(mask);
    e.low = LowestRanks(mask, kLowCards);
    if (options.mode == Mode::kExact) {
      const Rational r = CNilExact(kind, mask);
      e.p = r.ToDouble();
      e.exact = r.ToString();
    } else {
      const Estimate est = CNilMonteCarlo(kind, mask, options.samples, sampler);
      e.p = est.p;
      e.std_error = est.std_error;
    }
    entries.push_back(std::move(e));
  }
  CNilTable table(kind, options.mode, entries);
  if (options.mode == Mode::kMonteCarlo) {
    table.samples = options.samples;
    table.seed = options.seed;
  }
  return table;
}

const CNilTable& StandardCNilTable(SuitKind kind) {
  static const CNilTable side = BuildCNilTable(SuitKind::kSide);
  static const CNilTable spades = BuildCNilTable(SuitKind::kSpades);
  return kind == SuitKind::kSide ? side : spades;
}

nlohmann::json ToJson(const CNilTable& table) {
  nlohmann::json j;
  j["kind"] = "cnil";
  j["suit"] = SuitKindName(table.kind());
  j["mode"] = ModeName(table.mode());
  if (table.mode() == Mode::kMonteCarlo) {
    j["samples"] = table.samples;
    j["seed"] = table.seed;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : table.entries()) {
    std::string low;
    for (int r : e.low) low.push_back(RankChar(r));
    nlohmann::json row{{"length", e.length}, {"low", low}, {"p", e.p}};
    if (!e.exact.empty()) row["exact"] = e.exact;
    if (table.mode() == Mode::kMonteCarlo) row["std_error"] = e.std_error;
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

CNilTable CNilTableFromJson(const nlohmann::json& j) {
  if (j.value("kind", "") != "cnil") throw std::invalid_argument("not a cnil table");
  std::vector<CNilTable::Entry> entries;
  for (const auto& row : j.at("entries")) {
    CNilTable::Entry e;
    e.length = row.at("length").get<int>();
    for (char c : row.at("low").get<std::string>()) {
      const auto r = RankFromChar(c);
      if (!r) throw std::invalid_argument("bad rank in cnil table");
      e.low.push_back(*r);
    }
    e.p = row.at("p").get<double>();
    e.exact = row.value("exact", "");
    e.std_error = row.value("std_error", 0.0);
    entries.push_back(std::move(e));
  }
  CNilTable t(SuitKindFromName(j.at("suit").get<std::string>()), ModeFromName(j.value("mode", "exact")),
              entries);
  t.samples = j.value("samples", 0);
  t.seed = j.value("seed", std::uint64_t{0});
  return t;
}

}  // namespace spades::tables
