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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gamedec/game.hpp"

namespace gamedec::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // includes none-exist outcomes
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitInternal = 1;

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "json";  // json | dot | md
  int threads = 1;
};

struct GenerateOptions {
  int players = 24;
  int choices = 2;
  int payoff_min = 0;
  int payoff_max = 9;
  std::string topology = "clustered";  // singletons|ring|random|clustered
  int groups = 2;
  int core = 5;
  double edge_prob = 0.1;
};

struct AnalyzeOptions {
  std::string game_file;
  std::string truth_file;  // optional; auto-detected next to the game
  int samples_per_player = 10;
  std::string mode = "harvest";  // harvest | per-subject
};

struct CutOptions {
  std::string report_file;  // spectral report from analyze
  double value_threshold = 0.29;
  double entry_threshold = 0.05;
};

struct SolveOptions {
  std::string game_file;
  std::string source = "linear-fit";  // components | linear-fit | file
  std::vector<std::vector<PlayerId>> parts;  // for linear-fit
  std::string decomposition_file;            // for file
  int samples_per_player = 10;               // for components
  bool compare_brute = true;
};

struct ReproOptions {
  std::string experiment;  // exp1 | exp2
  int samples_per_player = 10;
};

// Each returns a process exit code and writes human-readable progress to
// `out` (machine artifacts go to files under common.out_dir).
int cmd_generate(const CommonOptions& common, const GenerateOptions& opt,
                 std::ostream& out);
int cmd_analyze(const CommonOptions& common, const AnalyzeOptions& opt,
                std::ostream& out);
int cmd_cut(const CommonOptions& common, const CutOptions& opt,
            std::ostream& out);
int cmd_solve(const CommonOptions& common, const SolveOptions& opt,
              std::ostream& out);
int cmd_repro(const CommonOptions& common, const ReproOptions& opt,
              std::ostream& out);

/// Parses "0,1;0,2"-style part lists. Throws std::invalid_argument.
std::vector<std::vector<PlayerId>> parse_part_sets(const std::string& text);

}  // namespace gamedec::cli
