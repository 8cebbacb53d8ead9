// Copyright 2026 The gamedec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gamedec/cli.hpp"

namespace {

void add_common(CLI::App* sub, gamedec::cli::CommonOptions& common) {
  sub->add_option("--seed", common.seed, "Master RNG seed")
      ->capture_default_str();
  sub->add_option("--out-dir", common.out_dir,
                  "Directory for output artifacts")
      ->capture_default_str();
  sub->add_option("--format", common.format,
                  "Report flavor: json, dot, or md")
      ->capture_default_str();
  sub->add_option("--threads", common.threads, "Worker threads")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gamedec::cli;

  CLI::App app{
      "gamedec: recover the hidden interaction structure of a black-box "
      "game from payoff differences, split it into independent or "
      "approximately independent parts, and solve the parts for "
      "equilibria that are consistent across a decomposition."};
  app.require_subcommand(1);

  CommonOptions common;

  GenerateOptions gen;
  CLI::App* sub_gen = app.add_subcommand(
      "generate", "Generate a random game with a known interaction graph");
  add_common(sub_gen, common);
  sub_gen->add_option("--players", gen.players, "Number of players")
      ->capture_default_str();
  sub_gen->add_option("--choices", gen.choices, "Choices per player")
      ->capture_default_str();
  sub_gen->add_option("--payoff-min", gen.payoff_min, "Smallest payoff")
      ->capture_default_str();
  sub_gen->add_option("--payoff-max", gen.payoff_max, "Largest payoff")
      ->capture_default_str();
  sub_gen
      ->add_option("--topology", gen.topology,
                   "Interaction shape: singletons, ring, random, clustered")
      ->capture_default_str();
  sub_gen->add_option("--groups", gen.groups, "Clustered: group count")
      ->capture_default_str();
  sub_gen->add_option("--core", gen.core, "Clustered: core clique size")
      ->capture_default_str();
  sub_gen
      ->add_option("--edge-prob", gen.edge_prob,
                   "Random topology: edge probability")
      ->capture_default_str();

  AnalyzeOptions ana;
  CLI::App* sub_ana = app.add_subcommand(
      "analyze", "Recover the interaction graph of a game from samples");
  add_common(sub_ana, common);
  sub_ana->add_option("--game", ana.game_file, "Game JSON file")->required();
  sub_ana->add_option("--truth", ana.truth_file,
                      "Ground-truth influencer sets for scoring (optional; "
                      "a ground_truth.json next to the game is auto-used)");
  sub_ana->add_option("--L,--samples-per-player", ana.samples_per_player,
                      "Deviation samples per deviating player")
      ->capture_default_str();
  sub_ana->add_option("--mode", ana.mode, "Sampling: harvest or per-subject")
      ->capture_default_str();

  CutOptions cut;
  CLI::App* sub_cut = app.add_subcommand(
      "cut", "Drop weak interactions from a spectral report");
  add_common(sub_cut, common);
  sub_cut->add_option("--report", cut.report_file,
                      "spectral_report.json produced by analyze")
      ->required();
  sub_cut->add_option("--value-threshold", cut.value_threshold,
                      "Keep eigenvalues strictly above this")
      ->capture_default_str();
  sub_cut->add_option("--entry-threshold", cut.entry_threshold,
                      "Keep loadings strictly above this")
      ->capture_default_str();

  SolveOptions sol;
  std::string parts_text;
  CLI::App* sub_sol = app.add_subcommand(
      "solve", "Find equilibria that are consistent across a decomposition");
  add_common(sub_sol, common);
  sub_sol->add_option("--game", sol.game_file, "Game JSON file")->required();
  sub_sol->add_option("--source", sol.source,
                      "Decomposition source: components, linear-fit, file")
      ->capture_default_str();
  sub_sol->add_option("--parts", parts_text,
                      "linear-fit member sets, e.g. \"0,1;0,2\"");
  sub_sol->add_option("--decomposition", sol.decomposition_file,
                      "Decomposition JSON (for --source file)");
  sub_sol->add_option("--L,--samples-per-player", sol.samples_per_player,
                      "Sampling budget for --source components")
      ->capture_default_str();
  sub_sol->add_flag("--compare-brute,!--no-compare-brute", sol.compare_brute,
                    "Compare against whole-game brute force when feasible");

  ReproOptions rep;
  CLI::App* sub_rep = app.add_subcommand(
      "repro", "Run a packaged end-to-end experiment (exp1 or exp2)");
  add_common(sub_rep, common);
  sub_rep->add_option("experiment", rep.experiment, "exp1 or exp2")
      ->required();
  sub_rep->add_option("--L,--samples-per-player", rep.samples_per_player,
                      "Deviation samples per deviating player (exp1)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (sub_sol->parsed() && !parts_text.empty()) {
    try {
      sol.parts = parse_part_sets(parts_text);
    } catch (const std::invalid_argument& e) {
      std::cout << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  if (sub_gen->parsed()) return cmd_generate(common, gen, std::cout);
  if (sub_ana->parsed()) return cmd_analyze(common, ana, std::cout);
  if (sub_cut->parsed()) return cmd_cut(common, cut, std::cout);
  if (sub_sol->parsed()) return cmd_solve(common, sol, std::cout);
  if (sub_rep->parsed()) return cmd_repro(common, rep, std::cout);
  return kExitUsage;
}
