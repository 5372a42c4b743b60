#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "resources.h"
#include "spades/harness/match.h"
#include "spades/harness/stats.h"
#include "spades/service/server.h"

namespace {

using namespace spades;

struct Common {
  harness::MatchConfig match;
  std::string curves = tools::DefaultCurvesPath();
  std::string single_curve = tools::DefaultSingleCurvePath();
  std::string logs;
  std::string stats_out;
  int uct_iters = 1000;
  double uct_seconds = 0;
  double uct_c = 100;
};

void AddMatchOptions(CLI::App* cmd, Common& c) {
  cmd->add_option("--player", c.match.a_player, "Playing module for every seat");
  cmd->add_option("--games", c.match.games, "Number of games")->check(CLI::PositiveNumber);
  cmd->add_option("--goal", c.match.goals.win, "Winning goal");
  cmd->add_option("--lose", c.match.goals.lose, "Losing goal");
  cmd->add_option("--seed", c.match.seed, "Master seed");
  cmd->add_option("--threads", c.match.threads, "Worker threads (0 = all cores)");
  cmd->add_flag("!--no-swap", c.match.swap_seats, "Do not replay deals with partnerships swapped");
  cmd->add_flag("!--no-blind-nil", c.match.blind_nil_allowed, "Disallow blind nil");
  cmd->add_option("--sc", c.curves, "Success curves JSON");
  cmd->add_option("--sc-single", c.single_curve, "Single success curve JSON");
  cmd->add_option("--logs", c.logs, "Write round logs as JSONL");
  cmd->add_option("--stats", c.stats_out, "Write stats JSON");
  cmd->add_option("--uct-iters", c.uct_iters, "UCT iterations per move");
  cmd->add_option("--uct-seconds", c.uct_seconds, "UCT seconds per move (overrides iterations)");
  cmd->add_option("--uct-c", c.uct_c, "UCT exploration constant");
}

int Run(Common& c) {
  harness::AgentResources res;
  res.curves = tools::LoadCurvesOrIdentity(c.curves);
  res.single_curve = tools::LoadCurvesOrIdentity(c.single_curve);
  res.uct.iterations = c.uct_iters;
  res.uct.seconds = c.uct_seconds;
  res.uct.exploration = c.uct_c;

  std::ofstream logs;
  if (!c.logs.empty()) {
    logs.open(c.logs);
    if (!logs) throw std::runtime_error("cannot write " + c.logs);
  }
  const auto start = std::chrono::steady_clock::now();
  const harness::MatchStats stats = harness::RunMatch(c.match, res, [&](const RoundLog& log) {
    if (logs.is_open()) logs << ToJson(log).dump() << '\n';
  });
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;

  nlohmann::json out = harness::ToJson(stats);
  out["config"] = {{"a", c.match.a_bidder + "+" + c.match.a_player},
                   {"b", c.match.b_bidder + "+" + c.match.b_player},
                   {"games", c.match.games},
                   {"seed", c.match.seed},
                   {"goal", c.match.goals.win},
                   {"lose", c.match.goals.lose}};
  out["seconds"] = took.count();
  if (!c.stats_out.empty()) std::ofstream(c.stats_out) << out.dump(2) << '\n';
  std::cout << c.match.a_bidder << "+" << c.match.a_player << " vs " << c.match.b_bidder << "+"
            << c.match.b_player << ": win rate " << stats.win_rate_a() << " [" << stats.wilson_lower()
            << ", " << stats.wilson_upper() << "] over " << stats.games << " games, " << stats.rounds
            << " rounds; points/round " << stats.points_per_round(0) << " : " << stats.points_per_round(1)
            << " (" << took.count() << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spades bots: simulation, statistics and the play service"};
  app.require_subcommand(1);

  Common sim;
  auto* sim_cmd = app.add_subcommand("sim", "Play a seeded match between two partnerships");
  sim_cmd->add_option("--ns-bidder", sim.match.a_bidder, "Bidder of side A (starts as N/S)");
  sim_cmd->add_option("--ew-bidder", sim.match.b_bidder, "Bidder of side B (starts as E/W)");
  sim_cmd->add_option("--ew-player", sim.match.b_player, "Playing module of side B (default: --player)");
  AddMatchOptions(sim_cmd, sim);

  Common abl;
  std::string which = "single-curve";
  auto* abl_cmd = app.add_subcommand("ablate", "Full BIS against BIS with one component disabled");
  abl_cmd->add_option("--which", which, "single-curve | no-endgame | no-conventions");
  AddMatchOptions(abl_cmd, abl);

  std::string stats_in;
  std::string stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Recompute statistics from JSONL round logs");
  stats_cmd->add_option("--in", stats_in, "JSONL logs")->required();
  stats_cmd->add_option("--out", stats_out, "Write stats JSON");

  service::ServerOptions serve;
  std::string serve_curves = tools::DefaultCurvesPath();
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP play service");
  serve_cmd->add_option("--host", serve.host, "Listen address");
  serve_cmd->add_option("--port", serve.port, "Listen port (0 = any free port)");
  serve_cmd->add_option("--rounds-jsonl", serve.rounds_jsonl, "Append finished rounds as JSONL");
  serve_cmd->add_option("--static", serve.static_dir, "Directory served under /");
  serve_cmd->add_option("--sc", serve_curves, "Success curves JSON");
  serve_cmd->add_option("--uct-seconds", serve.resources.uct.seconds, "UCT seconds per move");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim_cmd) {
      if (sim_cmd->count("--ew-player") == 0) sim.match.b_player = sim.match.a_player;
      return Run(sim);
    }
    if (*abl_cmd) {
      abl.match = harness::AblationConfig(abl.match, harness::AblationFromName(which));
      return Run(abl);
    }
    if (*stats_cmd) {
      std::ifstream in(stats_in);
      if (!in) throw std::runtime_error("cannot read " + stats_in);
      std::vector<harness::LineError> errors;
      const auto stats = harness::StatsFromJsonl(in, &errors);
      for (const auto& e : errors) std::cerr << stats_in << ":" << e.line << ": " << e.message << '\n';
      const std::string text = harness::ToJson(stats).dump(2);
      if (stats_out.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream(stats_out) << text << '\n';
      }
      return errors.empty() ? 0 : 2;
    }
    if (*serve_cmd) {
      serve.resources.curves = tools::LoadCurvesOrIdentity(serve_curves);
      serve.resources.single_curve = serve.resources.curves;
      service::PlayServer server(serve);
      const int port = server.Bind();
      std::cout << "listening on http://" << serve.host << ":" << port << std::endl;
      server.Listen();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
