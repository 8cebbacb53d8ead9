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

#include "gamedec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gamedec/decomposer.hpp"
#include "gamedec/equilibrium.hpp"
#include "gamedec/errors.hpp"
#include "gamedec/generator.hpp"
#include "gamedec/parallel.hpp"
#include "gamedec/rng.hpp"
#include "gamedec/sampler.hpp"
#include "gamedec/serialize.hpp"
#include "gamedec/spectral.hpp"

namespace fs = std::filesystem;

namespace gamedec::cli {
namespace {

constexpr std::uint64_t kExp2Tables = 0xe9b2;

template <typename Fn>
int run_guarded(std::ostream& out, Fn&& fn) {
  try {
    return fn();
  } catch (const CapacityError& e) {
    out << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const IoError& e) {
    out << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    out << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

void check_common(const CommonOptions& common) {
  if (common.format != "json" && common.format != "dot" &&
      common.format != "md") {
    throw std::invalid_argument("--format must be json, dot, or md");
  }
  if (common.threads < 1) {
    throw std::invalid_argument("--threads must be at least 1");
  }
}

std::string out_path(const CommonOptions& common, const std::string& name) {
  std::error_code ec;
  fs::create_directories(common.out_dir, ec);
  if (ec) throw IoError("cannot create directory " + common.out_dir);
  return (fs::path(common.out_dir) / name).string();
}

std::string fmt_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string profile_str(const StrategyProfile& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

std::string members_str(const std::vector<PlayerId>& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ", ";
    os << m[i];
  }
  os << "}";
  return os.str();
}

std::string component_sizes(const InteractionGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) os << "+";
    os << g.components[i].size();
  }
  return os.str();
}

// Generation core shared by cmd_generate and the experiment harness.
struct Generated {
  GameTables tables;
  std::vector<std::vector<PlayerId>> influencers;
  std::string topology_note;
};

Generated build_game(const CommonOptions& common, const GenerateOptions& opt) {
  if (opt.players < 1) throw std::invalid_argument("--players must be >= 1");
  if (opt.choices < 1) throw std::invalid_argument("--choices must be >= 1");
  if (opt.payoff_min > opt.payoff_max) {
    throw std::invalid_argument("--payoff-min must not exceed --payoff-max");
  }

  Generated g;
  std::ostringstream note;
  if (opt.topology == "singletons") {
    g.influencers = topology_singletons(opt.players);
    note << "singletons";
  } else if (opt.topology == "ring") {
    g.influencers = topology_ring(opt.players);
    note << "ring";
  } else if (opt.topology == "random") {
    g.influencers = topology_random(opt.players, opt.edge_prob, common.seed);
    note << "random edge-prob=" << fmt_num(opt.edge_prob);
  } else if (opt.topology == "clustered") {
    // Clamp to a feasible shape: the largest group count <= the request
    // that divides the player set evenly, and a core that fits a block.
    int groups = std::min(std::max(opt.groups, 1), opt.players);
    while (opt.players % groups != 0) --groups;
    const int block = opt.players / groups;
    const int core = std::min(std::max(opt.core, 1), block);
    g.influencers = topology_clustered(opt.players, groups, core, common.seed);
    note << "clustered groups=" << groups << " core=" << core;
  } else {
    throw std::invalid_argument(
        "--topology must be singletons, ring, random, or clustered");
  }

  GeneratorSpec spec;
  spec.n_players = opt.players;
  spec.choices_per_player = opt.choices;
  spec.influencer_sets = g.influencers;
  spec.payoff_min = opt.payoff_min;
  spec.payoff_max = opt.payoff_max;
  spec.rng_seed = common.seed;
  g.tables = generate_game(spec);
  g.topology_note = note.str();
  return g;
}

// Analysis core shared by cmd_analyze, cmd_solve(components), and repro.
struct Analysis {
  BatchSample batch;
  std::vector<InfluenceReport> reports;
  InteractionGraph graph;
  double elapsed_ms = 0.0;
};

Analysis analyze_game(const Game& game, int samples_per_player,
                      std::uint64_t seed, SamplingMode mode, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  Analysis a;
  a.batch = all_interaction_matrices(game, samples_per_player, seed, mode,
                                     threads);
  a.reports.resize(a.batch.matrices.size());
  parallel_for(static_cast<int>(a.batch.matrices.size()), threads, [&](int i) {
    a.reports[static_cast<std::size_t>(i)] =
        influence_report(a.batch.matrices[static_cast<std::size_t>(i)]);
  });
  a.graph = build_graph(a.reports);
  a.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return a;
}

// Tabulates a restriction-view part so it can be serialized and later
// reloaded without its parent. Views too large to tabulate stay views.
PartialGame materialize_part(const std::shared_ptr<const Game>& game,
                             const PartialGame& part) {
  const std::uint64_t space = part.num_profiles();
  if (part.table_backed() || space > kExhaustiveCap) return part;
  std::vector<std::vector<double>> tables(
      static_cast<std::size_t>(part.num_members()),
      std::vector<double>(static_cast<std::size_t>(space)));
  PartialProfile pp;
  pp.support = part.members();
  pp.choices.assign(pp.support.size(), 0);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    unflatten_profile(idx, part.member_choice_counts(), pp.choices);
    for (int m = 0; m < part.num_members(); ++m) {
      tables[static_cast<std::size_t>(m)][idx] =
          part.utility(pp.support[static_cast<std::size_t>(m)], pp);
    }
  }
  return PartialGame::from_tables(game, part.members(), std::move(tables));
}

SamplingMode parse_mode(const std::string& mode) {
  if (mode == "harvest") return SamplingMode::harvest;
  if (mode == "per-subject") return SamplingMode::per_subject;
  throw std::invalid_argument("--mode must be harvest or per-subject");
}

void write_analysis_files(const CommonOptions& common, const Analysis& a) {
  Json interactions = Json::array();
  for (const InteractionMatrix& im : a.batch.matrices) {
    interactions.push_back(interaction_to_json(im));
  }
  write_json_file(out_path(common, "interactions.json"), interactions);
  write_json_file(out_path(common, "spectral_report.json"),
                  reports_to_json(a.reports));
  write_json_file(out_path(common, "graph.json"), graph_to_json(a.graph));
  write_text_file(out_path(common, "graph.dot"), graph_to_dot(a.graph));
}

// Resolves the ground-truth file: the explicit flag, else a
// ground_truth.json sitting next to the game file.
std::string resolve_truth(const AnalyzeOptions& opt) {
  if (!opt.truth_file.empty()) return opt.truth_file;
  const fs::path sibling =
      fs::path(opt.game_file).parent_path() / "ground_truth.json";
  std::error_code ec;
  if (fs::exists(sibling, ec)) return sibling.string();
  return {};
}

int generate_impl(const CommonOptions& common, const GenerateOptions& opt,
                  std::ostream& out) {
  check_common(common);
  Generated g = build_game(common, opt);
  const std::string game_path = out_path(common, "game.json");
  const std::string truth_path = out_path(common, "ground_truth.json");
  write_json_file(game_path, game_to_json(g.tables));
  write_json_file(truth_path, truth_to_json(g.influencers));

  const InteractionGraph truth = graph_from_influencers(g.influencers);
  out << "generated " << opt.players << "-player game, " << opt.choices
      << " choice(s) each, payoffs " << opt.payoff_min << ".."
      << opt.payoff_max << ", topology " << g.topology_note << ", seed "
      << common.seed << "\n";
  out << "interaction edges: " << truth.edges.size()
      << ", components: " << component_sizes(truth) << "\n";
  out << "wrote " << game_path << "\n";
  out << "wrote " << truth_path << "\n";
  return kExitOk;
}

int analyze_impl(const CommonOptions& common, const AnalyzeOptions& opt,
                 std::ostream& out) {
  check_common(common);
  if (opt.game_file.empty()) {
    throw std::invalid_argument("analyze requires --game");
  }
  const SamplingMode mode = parse_mode(opt.mode);
  const GameTables tables = game_from_json(read_json_file(opt.game_file));
  const std::shared_ptr<Game> game = make_game(tables);

  const Analysis a = analyze_game(*game, opt.samples_per_player, common.seed,
                                  mode, common.threads);
  write_analysis_files(common, a);

  out << "analyzed " << game->num_players() << " players with L="
      << opt.samples_per_player << " (" << opt.mode << " mode)\n";
  out << "rows per subject matrix: "
      << a.batch.matrices.front().sample_rows
      << ", deviation pairs drawn: " << a.batch.stats.pair_draws
      << ", oracle calls: " << a.batch.stats.oracle_calls << "\n";
  out << "recovered edges: " << a.graph.edges.size()
      << ", components: " << component_sizes(a.graph) << "\n";

  const std::string truth_path = resolve_truth(opt);
  if (!truth_path.empty()) {
    const auto sets = truth_from_json(read_json_file(truth_path));
    const RecoveryScore score =
        score_recovery(graph_from_influencers(sets), a.graph);
    write_json_file(out_path(common, "recovery.json"),
                    recovery_to_json(score));
    out << "recovery vs " << truth_path << ": precision "
        << fmt_num(score.precision) << ", recall " << fmt_num(score.recall)
        << ", exact " << (score.exact ? "yes" : "no") << "\n";
  }

  out << "artifacts in " << common.out_dir
      << ": interactions.json, spectral_report.json, graph.json, graph.dot\n";
  out << "analysis time: " << fmt_num(a.elapsed_ms) << " ms\n";
  return kExitOk;
}

int cut_impl(const CommonOptions& common, const CutOptions& opt,
             std::ostream& out) {
  check_common(common);
  if (opt.report_file.empty()) {
    throw std::invalid_argument("cut requires --report (spectral_report.json "
                                "produced by analyze)");
  }
  const auto reports = reports_from_json(read_json_file(opt.report_file));
  const InteractionGraph graph =
      approximate_cut(reports, opt.value_threshold, opt.entry_threshold);

  write_json_file(out_path(common, "cut_graph.json"), graph_to_json(graph));
  write_text_file(out_path(common, "cut_graph.dot"), graph_to_dot(graph));

  out << "cut thresholds: eigenvalue > " << fmt_num(opt.value_threshold)
      << ", loading > " << fmt_num(opt.entry_threshold) << "\n";
  out << "kept edges: " << graph.edges.size()
      << ", cut edges: " << graph.cut_edges.size() << "\n";
  out << "components (" << graph.components.size()
      << "): " << component_sizes(graph) << "\n";
  out << "artifacts in " << common.out_dir
      << ": cut_graph.json, cut_graph.dot\n";
  return kExitOk;
}

void print_part_equilibria(const ConsistencyResult& res,
                           const LinearDecomposition& d, std::ostream& out) {
  for (std::size_t k = 0; k < res.part_equilibria.size(); ++k) {
    const EquilibriumSet& eq = res.part_equilibria[k];
    out << "part " << k << " " << members_str(d.parts[k].members())
        << ": " << eq.profiles.size() << " equilibria";
    if (!eq.profiles.empty() && eq.profiles.size() <= 16) {
      out << " ->";
      for (const StrategyProfile& p : eq.profiles) {
        out << " " << profile_str(p);
      }
    }
    out << " (" << eq.evals_used << " scans)\n";
  }
}

int solve_impl(const CommonOptions& common, const SolveOptions& opt,
               std::ostream& out) {
  check_common(common);
  if (opt.game_file.empty()) {
    throw std::invalid_argument("solve requires --game");
  }
  const GameTables tables = game_from_json(read_json_file(opt.game_file));
  const std::shared_ptr<Game> game = make_game(tables);

  LinearDecomposition d;
  ResidualReport report;
  if (opt.source == "components") {
    const Analysis a =
        analyze_game(*game, opt.samples_per_player, common.seed,
                     SamplingMode::harvest, common.threads);
    const ComponentDecomposition comp =
        decompose_by_components(game, a.graph);
    out << "component decomposition: " << component_sizes(a.graph) << "\n";
    d.parts.reserve(comp.parts.size());
    for (const PartialGame& part : comp.parts) {
      d.parts.push_back(materialize_part(game, part));
    }
    d.weights.assign(d.parts.size(), 1.0);
    report = verify_linear(*game, d, common.seed);
  } else if (opt.source == "linear-fit") {
    if (opt.parts.empty()) {
      throw std::invalid_argument(
          "solve --source linear-fit requires --parts \"0,1;0,2\"-style "
          "member sets");
    }
    FitResult fit = fit_linear(game, opt.parts, common.seed);
    d = std::move(fit.decomposition);
    report = fit.report;
    out << "fitted " << d.parts.size() << " part(s), residual "
        << fmt_num(report.max_abs_error) << " (tolerance "
        << fmt_num(report.tolerance) << ", "
        << (report.exhaustive ? "exhaustive" : "sampled") << " check)\n";
  } else if (opt.source == "file") {
    if (opt.decomposition_file.empty()) {
      throw std::invalid_argument(
          "solve --source file requires --decomposition <file>");
    }
    d = decomposition_from_json(read_json_file(opt.decomposition_file), game);
    report = verify_linear(*game, d, common.seed);
    out << "loaded " << d.parts.size() << " part(s) from "
        << opt.decomposition_file << ", residual "
        << fmt_num(report.max_abs_error) << "\n";
  } else {
    throw std::invalid_argument(
        "--source must be components, linear-fit, or file");
  }

  if (!report.ok()) {
    throw std::invalid_argument(
        "decomposition does not reproduce the game: residual " +
        fmt_num(report.max_abs_error) + " exceeds tolerance " +
        fmt_num(report.tolerance) +
        " — adjust the member sets or sampling budget");
  }

  const ConsistencyResult res = consistent_equilibria(*game, d, report);
  write_json_file(out_path(common, "decomposition.json"),
                  decomposition_to_json(d, report.max_abs_error));
  write_json_file(
      out_path(common, "equilibria.json"),
      equilibria_to_json(res.profiles, res.status, res.evals_used));

  print_part_equilibria(res, d, out);
  out << "consistent equilibria: " << res.profiles.size();
  for (const StrategyProfile& p : res.profiles) out << " " << profile_str(p);
  out << "\n";
  out << "status: " << res.status << "; part-profile scans: "
      << res.evals_used << "; certified candidates: "
      << res.certification_evals << "\n";

  if (opt.compare_brute && game->num_profiles() <= kProfileCap) {
    const EquilibriumSet brute = brute_force_nash(*game);
    out << "brute force: " << brute.profiles.size() << " equilibria in "
        << brute.evals_used << " profile scans (vs " << res.evals_used
        << " part scans)\n";
    if (res.status == "none-exist" && !brute.profiles.empty()) {
      out << "warning: no consistent equilibrium under this decomposition; "
             "the game's equilibria were not found by it:";
      for (const StrategyProfile& p : brute.profiles) {
        out << " " << profile_str(p);
      }
      out << "\n";
    }
  } else if (res.status == "none-exist") {
    out << "warning: no consistent equilibrium under this decomposition\n";
  }
  out << "artifacts in " << common.out_dir
      << ": decomposition.json, equilibria.json\n";
  return kExitOk;
}

// ---------------------------------------------------------------------
// Experiment harness.

int repro_exp1(const CommonOptions& common, const ReproOptions& opt,
               std::ostream& out) {
  if (opt.samples_per_player < 2) {
    throw std::invalid_argument(
        "exp1 requires at least 2 samples per player (--L)");
  }
  GenerateOptions gen;
  gen.players = 24;
  gen.choices = 2;
  gen.payoff_min = 0;
  gen.payoff_max = 9;
  gen.topology = "clustered";
  gen.groups = 2;
  gen.core = 5;

  Generated g = build_game(common, gen);
  write_json_file(out_path(common, "game.json"), game_to_json(g.tables));
  write_json_file(out_path(common, "ground_truth.json"),
                  truth_to_json(g.influencers));
  const std::shared_ptr<Game> game = make_game(g.tables);
  const InteractionGraph truth = graph_from_influencers(g.influencers);

  const Analysis a = analyze_game(*game, opt.samples_per_player, common.seed,
                                  SamplingMode::harvest, common.threads);
  write_analysis_files(common, a);
  const RecoveryScore score = score_recovery(truth, a.graph);
  write_json_file(out_path(common, "recovery.json"), recovery_to_json(score));

  const InteractionGraph cut = approximate_cut(a.reports, 0.29, 0.05);
  write_json_file(out_path(common, "cut_graph.json"), graph_to_json(cut));
  write_text_file(out_path(common, "cut_graph.dot"), graph_to_dot(cut));

  const std::uint64_t n = 24;
  const std::uint64_t budget =
      n * n * static_cast<std::uint64_t>(opt.samples_per_player);
  std::ostringstream md;
  md << "# Experiment 1: interaction recovery at scale\n\n";
  md << "A 24-player binary-choice game with payoffs drawn uniformly from "
        "{0..9} and a hidden two-block interaction structure is analyzed "
        "from payoff differences alone.\n\n";
  md << "## Parameters\n\n";
  md << "| parameter | value |\n|---|---|\n";
  md << "| players | 24 |\n| choices per player | 2 |\n";
  md << "| payoffs | integers 0..9 |\n";
  md << "| topology | " << g.topology_note << " |\n";
  md << "| samples per player (L) | " << opt.samples_per_player << " |\n";
  md << "| seed | " << common.seed << " |\n\n";
  md << "## Sample budget\n\n";
  md << "- rows per subject matrix: N*L = "
     << a.batch.matrices.front().sample_rows << "\n";
  md << "- difference samples across all subjects: N * N * L = " << budget
     << "\n";
  md << "- deviation pairs drawn (harvested): " << a.batch.stats.pair_draws
     << "\n";
  md << "- oracle calls: " << a.batch.stats.oracle_calls
     << " (2N per harvested pair)\n";
  md << "- profile space that exhaustive analysis would need: 2^24 = "
     << (1u << 24) << "\n\n";
  md << "## Recovery\n\n";
  md << "| metric | value |\n|---|---|\n";
  md << "| true edges | " << score.true_edges << " |\n";
  md << "| recovered edges | " << score.found_edges << " |\n";
  md << "| correct | " << score.correct << " |\n";
  md << "| precision | " << fmt_num(score.precision) << " |\n";
  md << "| recall | " << fmt_num(score.recall) << " |\n";
  md << "| exact match | " << (score.exact ? "yes" : "no") << " |\n\n";
  md << "Components recovered: " << component_sizes(a.graph)
     << " (players per component). Each component is an independent "
        "subgame, so equilibrium search drops from 2^24 to 2^12 per "
        "component.\n\n";
  md << "## Approximate cut (eigenvalue > 0.29, loading > 0.05)\n\n";
  md << "- kept edges: " << cut.edges.size() << "\n";
  md << "- cut edges: " << cut.cut_edges.size() << "\n";
  md << "- components after cut (" << cut.components.size()
     << "): " << component_sizes(cut) << "\n\n";
  md << "An edge is kept only if some eigenpair with eigenvalue above the "
        "value threshold loads on it above the entry threshold; cut edges "
        "(dashed in cut_graph.dot) had evidence only in eigenpairs at or "
        "below the eigenvalue cutoff:\n\n";
  if (cut.cut_edges.empty()) {
    md << "- none\n";
  } else {
    for (const GraphEdge& e : cut.cut_edges) {
      md << "- " << e.from << " -> " << e.to << "\n";
    }
  }
  md << "\n## Artifacts\n\n";
  md << "game.json, ground_truth.json, interactions.json, "
        "spectral_report.json, graph.json, graph.dot, recovery.json, "
        "cut_graph.json, cut_graph.dot\n";
  write_text_file(out_path(common, "report.md"), md.str());

  out << "exp1 complete: recovery "
      << (score.exact ? "exact" : "inexact") << ", components "
      << component_sizes(a.graph) << ", after cut "
      << component_sizes(cut) << "\n";
  out << "report: " << out_path(common, "report.md") << "\n";
  return kExitOk;
}

// Builds the 3-player additive instance: two 2-player parts sharing
// player 0, combined by plain summation. `stream` selects one of many
// instances derived from the seed.
struct Exp2Instance {
  GameTables combined;
  std::vector<std::vector<PlayerId>> part_sets;
};

Exp2Instance build_exp2(std::uint64_t seed, std::uint64_t stream) {
  constexpr int kChoices = 3;
  Exp2Instance inst;
  inst.part_sets = {{0, 1}, {0, 2}};

  auto draw_table = [&](std::uint64_t part, std::uint64_t member) {
    Rng rng = Rng::derive(seed, kExp2Tables, stream, part * 16 + member);
    std::vector<double> t(static_cast<std::size_t>(kChoices * kChoices));
    for (double& v : t) v = static_cast<double>(rng.uniform_int(0, 9));
    return t;
  };
  const auto t2_0 = draw_table(0, 0);  // part {0,1}, player 0
  const auto t2_1 = draw_table(0, 1);  // part {0,1}, player 1
  const auto t3_0 = draw_table(1, 0);  // part {0,2}, player 0
  const auto t3_2 = draw_table(1, 2);  // part {0,2}, player 2

  inst.combined.choice_counts = {kChoices, kChoices, kChoices};
  inst.combined.seed = seed;
  UtilityTable u0;
  u0.player = 0;
  u0.scope = {0, 1, 2};
  u0.values.resize(27);
  for (int a0 = 0; a0 < kChoices; ++a0) {
    for (int a1 = 0; a1 < kChoices; ++a1) {
      for (int a2 = 0; a2 < kChoices; ++a2) {
        u0.values[static_cast<std::size_t>(a0 * 9 + a1 * 3 + a2)] =
            t2_0[static_cast<std::size_t>(a0 * 3 + a1)] +
            t3_0[static_cast<std::size_t>(a0 * 3 + a2)];
      }
    }
  }
  UtilityTable u1;
  u1.player = 1;
  u1.scope = {0, 1};
  u1.values = t2_1;
  UtilityTable u2;
  u2.player = 2;
  u2.scope = {0, 2};
  u2.values = t3_2;
  inst.combined.tables = {std::move(u0), std::move(u1), std::move(u2)};
  return inst;
}

// A same-shape decomposition with the shared player's payoff shifted
// between the parts: +delta on a0==c and -delta on a0==c_alt in the
// first part, the negation in the second. The shift cancels in the sum,
// so it is still an exact decomposition of the same game — but with a
// large delta the first part's player 0 strictly prefers c while the
// second part's strictly prefers c_alt, so the parts cannot agree and
// the join must report none-exist. This is the decomposition degree of
// freedom the join outcome depends on.
LinearDecomposition shift_decomposition(
    const std::shared_ptr<const Game>& game, const LinearDecomposition& base,
    int c, int c_alt, double delta) {
  LinearDecomposition alt;
  alt.weights = base.weights;
  for (std::size_t k = 0; k < base.parts.size(); ++k) {
    const PartialGame& part = base.parts[k];
    std::vector<std::vector<double>> tables = part.tables();
    if (k < 2) {
      // Player 0 is member index 0 of both parts; its table is laid out
      // with a0 varying slowest (3 consecutive entries per a0).
      const double sign = k == 0 ? 1.0 : -1.0;
      for (int j = 0; j < 3; ++j) {
        tables[0][static_cast<std::size_t>(c * 3 + j)] += sign * delta;
        tables[0][static_cast<std::size_t>(c_alt * 3 + j)] -= sign * delta;
      }
    }
    alt.parts.push_back(
        PartialGame::from_tables(game, part.members(), std::move(tables)));
  }
  return alt;
}

int repro_exp2(const CommonOptions& common, std::ostream& out) {
  // Search derived instance streams for one where the fitted
  // decomposition's parts agree — the "found" branch — so the report can
  // show both branches: the fitted decomposition finding equilibria and
  // a shifted one provably missing them. Deterministic given --seed.
  Exp2Instance inst;
  std::shared_ptr<Game> game;
  FitResult fit;
  ConsistencyResult res;
  std::uint64_t stream = 0;
  for (; stream < 64; ++stream) {
    inst = build_exp2(common.seed, stream);
    game = make_game(inst.combined);
    fit = fit_linear(game, inst.part_sets, common.seed);
    if (!fit.feasible) {
      throw std::logic_error("exp2: additive instance must fit exactly");
    }
    res = consistent_equilibria(*game, fit.decomposition, fit.report);
    if (res.status == "found" && !res.profiles.empty()) break;
  }
  if (stream == 64) {  // practically unreachable; keep the last instance
    stream = 63;
  }

  write_json_file(out_path(common, "game.json"),
                  game_to_json(inst.combined));
  write_json_file(out_path(common, "decomposition.json"),
                  decomposition_to_json(fit.decomposition,
                                        fit.report.max_abs_error));
  write_json_file(
      out_path(common, "equilibria.json"),
      equilibria_to_json(res.profiles, res.status, res.evals_used));
  const EquilibriumSet brute = brute_force_nash(*game);

  // The decomposition of a linear combination is not unique; shifting
  // payoff between the parts flips which branch the join takes. Pin the
  // first part to the a0 of a consistent equilibrium and the second part
  // to a different a0: disagreement is forced, so the same game under
  // this equally exact decomposition reports none-exist.
  const int alt_c = res.profiles.empty()
                        ? 0
                        : static_cast<int>(res.profiles.front()[0]);
  const int alt_c2 = (alt_c + 1) % 3;
  const double alt_delta = 50.0;
  const LinearDecomposition alt =
      shift_decomposition(game, fit.decomposition, alt_c, alt_c2, alt_delta);
  const ResidualReport alt_report = verify_linear(*game, alt, common.seed);
  bool have_alt = false;
  ConsistencyResult alt_res;
  if (alt_report.ok()) {
    alt_res = consistent_equilibria(*game, alt, alt_report);
    have_alt = alt_res.status != res.status;
  }

  std::ostringstream md;
  md << "# Experiment 2: consistent equilibria through a linear "
        "decomposition\n\n";
  md << "A 3-player game with 3 choices per player is built as the sum of "
        "two 2-player games sharing player 0 (members {0,1} and {0,2}, "
        "integer payoffs 0..9, seed "
     << common.seed << ", instance stream " << stream
     << "). The solver sees only the combined game and must find the "
        "decomposition itself.\n\n";
  md << "## Fit\n\n";
  md << "- member sets: {0, 1} and {0, 2}, weights fixed at 1\n";
  md << "- residual: " << fmt_num(fit.report.max_abs_error)
     << " (tolerance " << fmt_num(fit.report.tolerance) << ", "
     << (fit.report.exhaustive ? "exhaustive" : "sampled") << ")\n\n";
  md << "## Equilibria\n\n";
  md << "Part equilibria:\n\n";
  for (std::size_t k = 0; k < res.part_equilibria.size(); ++k) {
    md << "- part " << k << " "
       << members_str(fit.decomposition.parts[k].members()) << ": ";
    if (res.part_equilibria[k].profiles.empty()) {
      md << "none";
    } else {
      for (std::size_t i = 0; i < res.part_equilibria[k].profiles.size();
           ++i) {
        if (i) md << ", ";
        md << profile_str(res.part_equilibria[k].profiles[i]);
      }
    }
    md << "\n";
  }
  md << "\n- joined status: **" << res.status << "**";
  if (!res.profiles.empty()) {
    md << " — certified consistent equilibria:";
    for (const StrategyProfile& p : res.profiles) {
      md << " " << profile_str(p);
    }
  }
  md << "\n- part-profile scans: " << res.evals_used
     << " (2 parts x 3^2), vs " << brute.evals_used
     << " = 3^3 full-game scans for brute force\n";
  md << "- brute-force equilibria of the combined game:";
  if (brute.profiles.empty()) {
    md << " none";
  } else {
    for (const StrategyProfile& p : brute.profiles) {
      md << " " << profile_str(p);
    }
  }
  md << "\n";
  if (res.status == "found") {
    md << "- every consistent equilibrium is certified against the "
          "combined game, so the decomposition found "
       << res.profiles.size() << " of the " << brute.profiles.size()
       << " whole-game equilibria at a fraction of the scans\n";
  }
  md << "\n## The decomposition degree of freedom\n\n";
  if (have_alt) {
    md << "Moving " << fmt_num(alt_delta)
       << " payoff for player 0 between the parts (towards choice " << alt_c
       << " in part {0, 1}, towards choice " << alt_c2
       << " in part {0, 2}) keeps the decomposition exact (residual "
       << fmt_num(alt_report.max_abs_error)
       << ") but pins the parts to different choices for player 0. The "
          "join then reports **"
       << alt_res.status << "**";
    if (!alt_res.profiles.empty()) {
      md << " with";
      for (const StrategyProfile& p : alt_res.profiles) {
        md << " " << profile_str(p);
      }
    } else {
      md << ": the whole-game equilibria listed above are *not found* by "
            "this equally exact decomposition, because its part "
            "equilibria cannot agree on player 0";
    }
    md << ". Which branch a solve takes is a property of the chosen "
          "decomposition, not of the game alone.\n";
  } else {
    md << "The shifted decomposition did not change the outcome for this "
          "instance; the fitted decomposition's result stands.\n";
  }
  md << "\n## Artifacts\n\ngame.json, decomposition.json, "
        "equilibria.json\n";
  write_text_file(out_path(common, "report.md"), md.str());

  out << "exp2 complete: fit residual " << fmt_num(fit.report.max_abs_error)
      << ", status " << res.status << ", scans " << res.evals_used << " vs "
      << brute.evals_used << " brute\n";
  if (have_alt) {
    out << "alternative decomposition (shift " << fmt_num(alt_delta)
        << " towards choices " << alt_c << "/" << alt_c2
        << ") flips the outcome to " << alt_res.status << "\n";
  }
  out << "report: " << out_path(common, "report.md") << "\n";
  return kExitOk;
}

}  // namespace

std::vector<std::vector<PlayerId>> parse_part_sets(const std::string& text) {
  std::vector<std::vector<PlayerId>> sets;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<PlayerId> set;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (item.empty()) continue;
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(item, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("--parts: '" + item +
                                    "' is not a player index");
      }
      if (pos != item.size() || value < 0) {
        throw std::invalid_argument("--parts: '" + item +
                                    "' is not a player index");
      }
      set.push_back(value);
    }
    if (!set.empty()) sets.push_back(std::move(set));
  }
  if (sets.empty()) {
    throw std::invalid_argument(
        "--parts must list member sets like \"0,1;0,2\"");
  }
  return sets;
}

int cmd_generate(const CommonOptions& common, const GenerateOptions& opt,
                 std::ostream& out) {
  return run_guarded(out, [&] { return generate_impl(common, opt, out); });
}

int cmd_analyze(const CommonOptions& common, const AnalyzeOptions& opt,
                std::ostream& out) {
  return run_guarded(out, [&] { return analyze_impl(common, opt, out); });
}

int cmd_cut(const CommonOptions& common, const CutOptions& opt,
            std::ostream& out) {
  return run_guarded(out, [&] { return cut_impl(common, opt, out); });
}

int cmd_solve(const CommonOptions& common, const SolveOptions& opt,
              std::ostream& out) {
  return run_guarded(out, [&] { return solve_impl(common, opt, out); });
}

int cmd_repro(const CommonOptions& common, const ReproOptions& opt,
              std::ostream& out) {
  return run_guarded(out, [&] {
    check_common(common);
    if (opt.experiment == "exp1") return repro_exp1(common, opt, out);
    if (opt.experiment == "exp2") return repro_exp2(common, out);
    throw std::invalid_argument("repro experiment must be exp1 or exp2");
  });
}

}  // namespace gamedec::cli
