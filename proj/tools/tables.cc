#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "spades/tables/cnil_table.h"
#include "spades/tables/cut_table.h"

namespace {

using namespace spades::tables;

nlohmann::json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(in);
}

void Emit(const nlohmann::json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probability tables for bidding"};
  app.require_subcommand(1);

  int opponents = 2;
  std::string mode = "exact";
  int samples = 100000;
  std::uint64_t seed = 0;
  std::string out;
  auto* build = app.add_subcommand("build", "Build a cut table (cards per opponent in a side suit)");
  build->add_option("--opponents", opponents, "Opponents counted: 1, 2 or 3")->check(CLI::Range(1, 3));
  build->add_option("--mode", mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
  build->add_option("--samples", samples, "Monte-Carlo deals");
  build->add_option("--seed", seed, "Monte-Carlo seed");
  build->add_option("--out", out, "Output JSON (default stdout)");

  std::string suit = "side";
  auto* cnil = app.add_subcommand("cnil", "Build the clean-nil table for side suits or spades");
  cnil->add_option("--suit", suit, "side | spades")->check(CLI::IsMember({"side", "spades"}));
  cnil->add_option("--mode", mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
  cnil->add_option("--samples", samples, "Monte-Carlo deals per holding");
  cnil->add_option("--seed", seed, "Monte-Carlo seed");
  cnil->add_option("--out", out, "Output JSON (default stdout)");

  std::string a_path;
  std::string b_path;
  double tol = 0.005;
  auto* diff = app.add_subcommand("diff", "Compare two cut tables cell by cell");
  diff->add_option("a", a_path, "First table JSON")->required();
  diff->add_option("b", b_path, "Second table JSON")->required();
  diff->add_option("--tol", tol, "Allowed absolute difference");

  CLI11_PARSE(app, argc, argv);

  try {
    const BuildOptions options{ModeFromName(mode), samples, seed};
    if (*build) Emit(ToJson(BuildCutTable(opponents, options)), out);
    if (*cnil) Emit(ToJson(BuildCNilTable(SuitKindFromName(suit), options)), out);
    if (*diff) {
      const CutTable a = CutTableFromJson(ReadJson(a_path));
      const CutTable b = CutTableFromJson(ReadJson(b_path));
      const auto cells = DiffCutTables(a, b, tol);
      for (const CellDiff& c : cells) {
        std::cout << "m=" << c.m << " >" << c.k << ": " << c.a << " vs " << c.b << '\n';
      }
      std::cout << cells.size() << " cell(s) differ by more than " << tol << '\n';
      return cells.empty() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
