#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "resources.h"
#include "spades/sc/training.h"

int main(int argc, char** argv) {
  using namespace spades;
  CLI::App app{"Nil success curves: data generation and training"};
  app.require_subcommand(1);

  sc::DatasetConfig gen;
  std::string gen_curves;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Collect nil outcomes from noisy self-play");
  gen_cmd->add_option("--rounds", gen.rounds, "Rounds to play")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--explore", gen.explore_rate, "Chance of flipping a nil decision")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--player", gen.player, "Playing module");
  gen_cmd->add_option("--sc", gen_curves, "Success curves used while collecting (default identity)");
  gen_cmd->add_option("--out", gen_out, "Output JSONL")->required();

  std::string in_path;
  std::string out_path;
  std::string model_out;
  sc::TrainConfig train;
  auto* train_cmd = app.add_subcommand("train", "Fit the logistic model and write all curves");
  train_cmd->add_option("--in", in_path, "Dataset JSONL")->required();
  train_cmd->add_option("--out", out_path, "Success curves JSON")->required();
  train_cmd->add_option("--model-out", model_out, "Also write the fitted weights");
  train_cmd->add_option("--l2", train.l2, "L2 penalty");
  train_cmd->add_option("--lr", train.learning_rate, "Learning rate");
  train_cmd->add_option("--epochs", train.epochs, "Full-batch epochs");
  train_cmd->add_flag("--single-curve", train.single_curve, "Drop the bidding-sequence features");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      if (!gen_curves.empty()) gen.curves = tools::LoadCurvesOrIdentity(gen_curves);
      const auto data = sc::GenerateDataset(gen);
      std::ofstream out(gen_out);
      if (!out) throw std::runtime_error("cannot write " + gen_out);
      sc::WriteDataset(out, data);
      std::cout << data.size() << " nil examples from " << gen.rounds << " rounds\n";
    }
    if (*train_cmd) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot read " + in_path);
      const auto data = sc::ReadDataset(in);
      const sc::SCModel model = sc::Train(data, train);
      sc::SCTable table = sc::BuildTable(model);
      table.source = table.source + " on " + std::to_string(data.size()) + " examples";
      sc::SaveSCTable(table, out_path);
      if (!model_out.empty()) std::ofstream(model_out) << sc::ToJson(model).dump(2) << '\n';
      std::cout << sc::ToJson(model).dump() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
