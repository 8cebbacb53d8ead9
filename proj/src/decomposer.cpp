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

#include "gamedec/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "gamedec/eigen_jacobi.hpp"
#include "gamedec/errors.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/rng.hpp"

namespace gamedec {
namespace {

constexpr double kToleranceScale = 1e-9;
constexpr std::uint64_t kVerifyStream = 0x76657201;  // profile draws, verify
constexpr std::uint64_t kFitStream = 0x66697401;     // profile draws, fit

// Visits the evaluation profile set: the whole space when it fits the
// exhaustive cap, else kVerifySamples seeded draws. Returns {count,
// exhaustive}.
template <typename Fn>
std::pair<std::uint64_t, bool> visit_profiles(const Game& game,
                                              std::uint64_t seed,
                                              std::uint64_t stream, Fn&& fn) {
  const std::uint64_t space = game.num_profiles();
  StrategyProfile a(static_cast<std::size_t>(game.num_players()));
  if (space <= kExhaustiveCap) {
    for (std::uint64_t f = 0; f < space; ++f) {
      unflatten_profile(f, game.choice_counts(), a);
      fn(a);
    }
    return {space, true};
  }
  Rng rng = Rng::derive(seed, stream);
  for (std::uint64_t s = 0; s < kVerifySamples; ++s) {
    for (int p = 0; p < game.num_players(); ++p) {
      a[static_cast<std::size_t>(p)] = static_cast<Choice>(
          rng.next_below(static_cast<std::uint64_t>(game.choices(p))));
    }
    fn(a);
  }
  return {kVerifySamples, false};
}

void check_model_shape(const Game& combined, const LinearDecomposition& d) {
  if (d.parts.size() != d.weights.size()) {
    throw std::invalid_argument(
        "verify_linear: need one weight per part, got " +
        std::to_string(d.weights.size()) + " weights for " +
        std::to_string(d.parts.size()) + " parts");
  }
  if (d.parts.empty()) {
    throw std::invalid_argument("verify_linear: decomposition has no parts");
  }
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    if (d.weights[k] < 0.0) {
      throw NegativeWeightError("part " + std::to_string(k) + " has weight " +
                                std::to_string(d.weights[k]));
    }
  }
  for (const PartialGame& part : d.parts) {
    const auto& members = part.members();
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const PlayerId m = members[idx];
      if (m < 0 || m >= combined.num_players() ||
          part.member_choice_counts()[idx] != combined.choices(m)) {
        throw std::invalid_argument(
            "verify_linear: part member " + std::to_string(m) +
            " does not match the combined game");
      }
    }
  }
}

// Member choices of `full` in part member order (no validation; members
// are known good).
std::vector<Choice> restrict_choices(const StrategyProfile& full,
                                     const std::vector<PlayerId>& members) {
  std::vector<Choice> sub(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    sub[j] = full[static_cast<std::size_t>(members[j])];
  }
  return sub;
}

// Minimum-norm solution of the (symmetric PSD) normal equations
// G x = r via spectral pseudo-inverse.
std::vector<double> solve_min_norm(const Matrix& gram,
                                   const std::vector<double>& rhs) {
  const SymmetricEigen eig = jacobi_eigen(gram);
  const std::size_t d = rhs.size();
  std::vector<double> x(d, 0.0);
  if (eig.values.empty()) return x;
  const double cut = 1e-12 * std::max(eig.values.front(), 0.0);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (!(eig.values[k] > cut) || eig.values[k] <= 0.0) continue;
    double proj = 0.0;
    for (std::size_t j = 0; j < d; ++j) proj += eig.vectors[k][j] * rhs[j];
    const double scale = proj / eig.values[k];
    for (std::size_t j = 0; j < d; ++j) x[j] += scale * eig.vectors[k][j];
  }
  return x;
}

}  // namespace

ComponentDecomposition decompose_by_components(
    std::shared_ptr<const Game> game, const InteractionGraph& graph) {
  if (!game) throw std::invalid_argument("decompose_by_components: null game");
  if (graph.n_players != game->num_players()) {
    throw std::invalid_argument(
        "decompose_by_components: graph has " +
        std::to_string(graph.n_players) + " players, game has " +
        std::to_string(game->num_players()));
  }
  ComponentDecomposition out;
  out.components = graph.components;
  out.parts.reserve(out.components.size());
  for (const auto& comp : out.components) {
    out.parts.push_back(PartialGame::restriction(game, comp));
  }
  return out;
}

ResidualReport verify_linear(const Game& combined,
                             const LinearDecomposition& decomposition,
                             std::uint64_t seed) {
  check_model_shape(combined, decomposition);
  const std::size_t n = static_cast<std::size_t>(combined.num_players());

  ResidualReport report;
  double max_abs_u = 0.0;
  std::vector<double> model(n);
  auto visited = visit_profiles(
      combined, seed, kVerifyStream, [&](const StrategyProfile& a) {
        std::fill(model.begin(), model.end(), 0.0);
        for (std::size_t k = 0; k < decomposition.parts.size(); ++k) {
          const PartialGame& part = decomposition.parts[k];
          const double w = decomposition.weights[k];
          PartialProfile pp;
          pp.support = part.members();
          pp.choices = restrict_choices(a, part.members());
          for (PlayerId m : part.members()) {
            model[static_cast<std::size_t>(m)] += w * part.utility(m, pp);
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double u = combined.utility(static_cast<PlayerId>(i), a);
          max_abs_u = std::max(max_abs_u, std::abs(u));
          report.max_abs_error =
              std::max(report.max_abs_error, std::abs(u - model[i]));
        }
      });
  report.profiles_checked = visited.first;
  report.exhaustive = visited.second;
  report.tolerance = kToleranceScale * (1.0 + max_abs_u);
  return report;
}

FitResult fit_linear(std::shared_ptr<const Game> combined,
                     const std::vector<std::vector<PlayerId>>& member_sets,
                     std::uint64_t seed) {
  if (!combined) throw std::invalid_argument("fit_linear: null game");
  if (member_sets.empty()) {
    throw std::invalid_argument("fit_linear: no member sets given");
  }
  const int n = combined->num_players();
  const std::size_t n_parts = member_sets.size();

  // Normalized member sets and their table geometry.
  std::vector<std::vector<PlayerId>> sets(n_parts);
  std::vector<std::vector<int>> set_counts(n_parts);
  std::vector<std::size_t> table_len(n_parts);
  for (std::size_t k = 0; k < n_parts; ++k) {
    sets[k] = member_sets[k];
    std::sort(sets[k].begin(), sets[k].end());
    sets[k].erase(std::unique(sets[k].begin(), sets[k].end()), sets[k].end());
    if (sets[k].empty()) {
      throw std::invalid_argument("fit_linear: part " + std::to_string(k) +
                                  " has no members");
    }
    for (PlayerId p : sets[k]) {
      if (p < 0 || p >= n) {
        throw std::invalid_argument("fit_linear: part member " +
                                    std::to_string(p) + " out of range");
      }
      set_counts[k].push_back(combined->choices(p));
    }
    const std::uint64_t len = profile_space_size(set_counts[k]);
    if (len > static_cast<std::uint64_t>(kFitDimensionCap)) {
      throw CapacityError("fit_linear: part " + std::to_string(k) +
                          " table needs " + std::to_string(len) +
                          " entries, cap is " +
                          std::to_string(kFitDimensionCap));
    }
    table_len[k] = static_cast<std::size_t>(len);
  }

  std::vector<std::vector<std::size_t>> parts_of(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < n_parts; ++k) {
    for (PlayerId p : sets[k]) {
      parts_of[static_cast<std::size_t>(p)].push_back(k);
    }
  }

  // tables[k][member index] = fitted values over the part scope.
  std::vector<std::vector<std::vector<double>>> tables(n_parts);
  for (std::size_t k = 0; k < n_parts; ++k) {
    tables[k].assign(sets[k].size(), std::vector<double>(table_len[k], 0.0));
  }

  for (PlayerId i = 0; i < n; ++i) {
    const auto& ks = parts_of[static_cast<std::size_t>(i)];
    if (ks.empty()) continue;  // no unknowns; model for i is identically 0

    std::size_t dim = 0;
    std::vector<std::size_t> offset(ks.size());
    for (std::size_t t = 0; t < ks.size(); ++t) {
      offset[t] = dim;
      dim += table_len[ks[t]];
    }
    if (dim > static_cast<std::size_t>(kFitDimensionCap)) {
      throw CapacityError("fit_linear: player " + std::to_string(i) +
                          " stacks " + std::to_string(dim) +
                          " table entries, cap is " +
                          std::to_string(kFitDimensionCap));
    }

    Matrix gram(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    std::vector<double> rhs(dim, 0.0);
    std::vector<std::size_t> idx(ks.size());
    visit_profiles(
        *combined, seed, kFitStream + static_cast<std::uint64_t>(i),
        [&](const StrategyProfile& a) {
          for (std::size_t t = 0; t < ks.size(); ++t) {
            const std::size_t k = ks[t];
            const auto sub = restrict_choices(a, sets[k]);
            idx[t] = offset[t] + static_cast<std::size_t>(
                                     flatten_profile(sub, set_counts[k]));
          }
          const double u = combined->utility(i, a);
          for (std::size_t t1 = 0; t1 < ks.size(); ++t1) {
            rhs[idx[t1]] += u;
            for (std::size_t t2 = 0; t2 < ks.size(); ++t2) {
              gram(static_cast<std::int64_t>(idx[t1]),
                   static_cast<std::int64_t>(idx[t2])) += 1.0;
            }
          }
        });

    const std::vector<double> x = solve_min_norm(gram, rhs);
    for (std::size_t t = 0; t < ks.size(); ++t) {
      const std::size_t k = ks[t];
      const auto member_pos = static_cast<std::size_t>(
          std::lower_bound(sets[k].begin(), sets[k].end(), i) -
          sets[k].begin());
      std::copy(x.begin() + static_cast<std::ptrdiff_t>(offset[t]),
                x.begin() + static_cast<std::ptrdiff_t>(offset[t] +
                                                        table_len[k]),
                tables[k][member_pos].begin());
    }

    // Gauge: of the parts sharing player i, all but the first carry
    // zero-mean tables; the removed means fold into the first table so
    // the modeled sum is unchanged.
    if (ks.size() >= 2) {
      const std::size_t k0 = ks[0];
      const auto pos0 = static_cast<std::size_t>(
          std::lower_bound(sets[k0].begin(), sets[k0].end(), i) -
          sets[k0].begin());
      for (std::size_t t = 1; t < ks.size(); ++t) {
        const std::size_t k = ks[t];
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(sets[k].begin(), sets[k].end(), i) -
            sets[k].begin());
        auto& tab = tables[k][pos];
        const double mean =
            std::accumulate(tab.begin(), tab.end(), 0.0) /
            static_cast<double>(tab.size());
        for (double& v : tab) v -= mean;
        for (double& v : tables[k0][pos0]) v += mean;
      }
    }
  }

  FitResult result;
  for (std::size_t k = 0; k < n_parts; ++k) {
    result.decomposition.parts.push_back(
        PartialGame::from_tables(combined, sets[k], std::move(tables[k])));
  }
  result.decomposition.weights.assign(n_parts, 1.0);
  result.report = verify_linear(*combined, result.decomposition, seed);
  result.feasible = result.report.ok();
  return result;
}

}  // namespace gamedec
