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

#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/sampler.hpp"

namespace gamedec {

/// One retained eigenpair of an interaction matrix. Eigenvalues that
/// agree to within 1e-12 (relative to the largest) share a `cluster` id;
/// inside a cluster only the spanned subspace is meaningful, not the
/// individual vectors.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  int cluster = 0;
};

/// Positive part of one subject's interaction spectrum plus the derived
/// influencer set. The spectrum keeps eigenvalues above a noise floor of
/// 1e-9 times the trace; a player j is an influencer when some retained
/// eigenvector has a nonzero j-th coordinate. Players the subject's
/// payoff never reacts to produce exactly-zero sample columns, hence
/// exactly-zero eigenvector coordinates, so the zero test is sound.
struct InfluenceReport {
  PlayerId subject = 0;
  int n_players = 0;
  std::vector<EigenPair> pairs;        // descending by eigenvalue
  std::vector<PlayerId> influencers;   // ascending
};

InfluenceReport influence_report(const InteractionMatrix& im);

/// Influencers visible at stricter thresholds: eigenpairs with
/// value > value_threshold, coordinates with |v| > entry_threshold.
std::vector<PlayerId> influencers_at(const InfluenceReport& report,
                                     double value_threshold,
                                     double entry_threshold);

struct GraphEdge {
  PlayerId from = 0;  // influencing player
  PlayerId to = 0;    // influenced subject
  double strength = 0.0;
};

/// Directed influence graph over all players, with connected components
/// of its undirected skeleton. cut_edges lists edges removed by
/// approximate_cut (empty for an uncut graph).
struct InteractionGraph {
  int n_players = 0;
  std::vector<GraphEdge> edges;                    // sorted by (to, from)
  std::vector<std::vector<PlayerId>> components;   // each ascending
  std::vector<GraphEdge> cut_edges;
};

/// Edge from j to i for every influencer j != i of subject i. Edge
/// strength is the largest eigenvector loading |v_kj| among retained
/// pairs. Requires one report per subject 0..n-1 (any order); duplicate
/// or out-of-range subjects throw std::invalid_argument.
InteractionGraph build_graph(const std::vector<InfluenceReport>& reports);

/// Graph rebuilt with only the strong spectrum: eigenvalues above
/// value_threshold and loadings above entry_threshold. Edges of the
/// unthresholded graph that disappear are reported in cut_edges.
/// Negative thresholds throw std::invalid_argument.
InteractionGraph approximate_cut(const std::vector<InfluenceReport>& reports,
                                 double value_threshold,
                                 double entry_threshold);

/// Graph implied by known influencer sets (the ground truth of a
/// generated game): edge j -> i for every j in sets[i] with j != i,
/// strength fixed at 1.
InteractionGraph graph_from_influencers(
    const std::vector<std::vector<PlayerId>>& influencer_sets);

/// Edge-set agreement between a recovered graph and a reference one.
struct RecoveryScore {
  std::uint64_t true_edges = 0;
  std::uint64_t found_edges = 0;
  std::uint64_t correct = 0;   // found edges that are true
  double precision = 1.0;      // 1 when nothing was found
  double recall = 1.0;         // 1 when there was nothing to find
  bool exact = false;
};

RecoveryScore score_recovery(const InteractionGraph& truth,
                             const InteractionGraph& found);

}  // namespace gamedec
