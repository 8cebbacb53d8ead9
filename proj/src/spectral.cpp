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

#include "gamedec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "gamedec/eigen_jacobi.hpp"
#include "gamedec/union_find.hpp"

namespace gamedec {
namespace {

constexpr double kValueFloorScale = 1e-9;   // of the trace
constexpr double kClusterTol = 1e-12;       // of the leading eigenvalue

std::vector<PlayerId> influencer_union(const std::vector<EigenPair>& pairs,
                                       int n_players, double value_threshold,
                                       double entry_threshold) {
  std::vector<bool> hit(static_cast<std::size_t>(n_players), false);
  for (const EigenPair& p : pairs) {
    if (!(p.value > value_threshold)) continue;
    for (int j = 0; j < n_players; ++j) {
      if (std::abs(p.vector[static_cast<std::size_t>(j)]) > entry_threshold) {
        hit[static_cast<std::size_t>(j)] = true;
      }
    }
  }
  std::vector<PlayerId> out;
  for (int j = 0; j < n_players; ++j) {
    if (hit[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

void check_reports(const std::vector<InfluenceReport>& reports) {
  if (reports.empty()) {
    throw std::invalid_argument("graph: no influence reports given");
  }
  const int n = reports.front().n_players;
  std::set<PlayerId> seen;
  for (const InfluenceReport& r : reports) {
    if (r.n_players != n) {
      throw std::invalid_argument("graph: reports disagree on player count");
    }
    if (r.subject < 0 || r.subject >= n) {
      throw std::invalid_argument("graph: report subject " +
                                  std::to_string(r.subject) + " out of range");
    }
    if (!seen.insert(r.subject).second) {
      throw std::invalid_argument("graph: duplicate report for subject " +
                                  std::to_string(r.subject));
    }
  }
  if (static_cast<int>(reports.size()) != n) {
    throw std::invalid_argument("graph: need one report per player");
  }
}

double loading(const InfluenceReport& r, PlayerId j, double value_threshold,
               double entry_threshold) {
  double best = 0.0;
  for (const EigenPair& p : r.pairs) {
    if (!(p.value > value_threshold)) continue;
    const double mag = std::abs(p.vector[static_cast<std::size_t>(j)]);
    if (mag > entry_threshold) best = std::max(best, mag);
  }
  return best;
}

InteractionGraph graph_at(const std::vector<InfluenceReport>& reports,
                          double value_threshold, double entry_threshold) {
  check_reports(reports);
  const int n = reports.front().n_players;

  std::vector<const InfluenceReport*> by_subject(
      static_cast<std::size_t>(n), nullptr);
  for (const InfluenceReport& r : reports) {
    by_subject[static_cast<std::size_t>(r.subject)] = &r;
  }

  InteractionGraph g;
  g.n_players = n;
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    const InfluenceReport& r = *by_subject[static_cast<std::size_t>(i)];
    for (PlayerId j :
         influencers_at(r, value_threshold, entry_threshold)) {
      if (j == i) continue;  // self-dependence is not an edge
      g.edges.push_back(
          {j, i, loading(r, j, value_threshold, entry_threshold)});
      uf.unite(j, i);
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) {
              return std::make_pair(a.to, a.from) <
                     std::make_pair(b.to, b.from);
            });
  g.components = uf.groups();
  return g;
}

}  // namespace

InfluenceReport influence_report(const InteractionMatrix& im) {
  InfluenceReport report;
  report.subject = im.subject;
  report.n_players = static_cast<int>(im.c.rows());

  const SymmetricEigen eig = jacobi_eigen(im.c);
  const double floor = kValueFloorScale * std::max(im.c.trace(), 0.0);
  double lead = 0.0;
  int cluster = -1;
  double cluster_value = 0.0;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double value = eig.values[k];
    if (!(value > floor) || value <= 0.0) break;  // descending order
    if (cluster < 0 || cluster_value - value > kClusterTol * lead) {
      ++cluster;
      cluster_value = value;
      if (cluster == 0) lead = value;
    }
    report.pairs.push_back({value, eig.vectors[k], cluster});
  }
  report.influencers =
      influencer_union(report.pairs, report.n_players, 0.0, 0.0);
  return report;
}

std::vector<PlayerId> influencers_at(const InfluenceReport& report,
                                     double value_threshold,
                                     double entry_threshold) {
  return influencer_union(report.pairs, report.n_players, value_threshold,
                          entry_threshold);
}

InteractionGraph build_graph(const std::vector<InfluenceReport>& reports) {
  return graph_at(reports, 0.0, 0.0);
}

InteractionGraph approximate_cut(const std::vector<InfluenceReport>& reports,
                                 double value_threshold,
                                 double entry_threshold) {
  if (value_threshold < 0.0 || entry_threshold < 0.0) {
    throw std::invalid_argument("approximate_cut: thresholds must be >= 0");
  }
  InteractionGraph base = graph_at(reports, 0.0, 0.0);
  InteractionGraph cut = graph_at(reports, value_threshold, entry_threshold);

  std::set<std::pair<PlayerId, PlayerId>> kept;
  for (const GraphEdge& e : cut.edges) kept.insert({e.from, e.to});
  for (const GraphEdge& e : base.edges) {
    if (kept.find({e.from, e.to}) == kept.end()) cut.cut_edges.push_back(e);
  }
  return cut;
}

InteractionGraph graph_from_influencers(
    const std::vector<std::vector<PlayerId>>& influencer_sets) {
  const int n = static_cast<int>(influencer_sets.size());
  InteractionGraph g;
  g.n_players = n;
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    std::vector<PlayerId> sources = influencer_sets[static_cast<std::size_t>(i)];
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    for (PlayerId j : sources) {
      if (j < 0 || j >= n) {
        throw std::invalid_argument(
            "graph_from_influencers: influencer " + std::to_string(j) +
            " out of range");
      }
      if (j == i) continue;
      g.edges.push_back({j, i, 1.0});
      uf.unite(j, i);
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) {
              return std::make_pair(a.to, a.from) <
                     std::make_pair(b.to, b.from);
            });
  g.components = uf.groups();
  return g;
}

RecoveryScore score_recovery(const InteractionGraph& truth,
                             const InteractionGraph& found) {
  std::set<std::pair<PlayerId, PlayerId>> want;
  for (const GraphEdge& e : truth.edges) want.insert({e.from, e.to});
  RecoveryScore score;
  score.true_edges = want.size();
  score.found_edges = found.edges.size();
  for (const GraphEdge& e : found.edges) {
    if (want.count({e.from, e.to})) ++score.correct;
  }
  if (score.found_edges > 0) {
    score.precision = static_cast<double>(score.correct) /
                      static_cast<double>(score.found_edges);
  }
  if (score.true_edges > 0) {
    score.recall = static_cast<double>(score.correct) /
                   static_cast<double>(score.true_edges);
  }
  score.exact = score.correct == score.true_edges &&
                score.found_edges == score.true_edges;
  return score;
}

}  // namespace gamedec
