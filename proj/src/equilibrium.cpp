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

#include "gamedec/equilibrium.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gamedec/errors.hpp"

namespace gamedec {
namespace {

std::string describe_members(const std::vector<PlayerId>& members) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) os << ", ";
    os << members[i];
  }
  os << "]";
  return os.str();
}

void check_cap(const std::vector<PlayerId>& members, std::uint64_t space,
               std::uint64_t cap, const char* who) {
  if (space > cap) {
    throw CapacityError(std::string(who) + ": players " +
                        describe_members(members) + " span " +
                        std::to_string(space) + " profiles, cap is " +
                        std::to_string(cap));
  }
}

// No member improves by more than `tol` through a unilateral deviation.
bool nash_within(const Game& game, const StrategyProfile& a, double tol) {
  StrategyProfile b = a;
  for (int i = 0; i < game.num_players(); ++i) {
    const double here = game.utility(i, a);
    for (Choice c = 0; c < game.choices(i); ++c) {
      if (c == a[static_cast<std::size_t>(i)]) continue;
      b[static_cast<std::size_t>(i)] = c;
      const double there = game.utility(i, b);
      b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
      if (there > here + tol) return false;
    }
  }
  return true;
}

bool part_nash(const PartialGame& part, const std::vector<Choice>& choices) {
  PartialProfile pp;
  pp.support = part.members();
  pp.choices = choices;
  const auto& counts = part.member_choice_counts();
  for (int m = 0; m < part.num_members(); ++m) {
    const PlayerId player = part.members()[static_cast<std::size_t>(m)];
    const double here = part.utility(player, pp);
    const Choice keep = pp.choices[static_cast<std::size_t>(m)];
    for (Choice c = 0; c < counts[static_cast<std::size_t>(m)]; ++c) {
      if (c == keep) continue;
      pp.choices[static_cast<std::size_t>(m)] = c;
      const double there = part.utility(player, pp);
      pp.choices[static_cast<std::size_t>(m)] = keep;
      if (there > here) return false;
    }
  }
  return true;
}

}  // namespace

EquilibriumSet enumerate_nash(const Game& game, std::uint64_t profile_cap) {
  EquilibriumSet out;
  out.members.resize(static_cast<std::size_t>(game.num_players()));
  std::iota(out.members.begin(), out.members.end(), 0);
  const std::uint64_t space = game.num_profiles();
  check_cap(out.members, space, profile_cap, "enumerate_nash");

  StrategyProfile a(static_cast<std::size_t>(game.num_players()));
  for (std::uint64_t f = 0; f < space; ++f) {
    unflatten_profile(f, game.choice_counts(), a);
    ++out.evals_used;
    if (nash_within(game, a, 0.0)) out.profiles.push_back(a);
  }
  return out;  // flat-index order is lexicographic order
}

EquilibriumSet enumerate_nash(const PartialGame& part,
                              std::uint64_t profile_cap) {
  EquilibriumSet out;
  out.members = part.members();
  const std::uint64_t space = part.num_profiles();
  check_cap(out.members, space, profile_cap, "enumerate_nash");

  std::vector<Choice> choices(out.members.size());
  for (std::uint64_t f = 0; f < space; ++f) {
    unflatten_profile(f, part.member_choice_counts(), choices);
    ++out.evals_used;
    if (part_nash(part, choices)) out.profiles.push_back(choices);
  }
  return out;
}

bool satisfies(const PartialGame& part, const StrategyProfile& full_profile) {
  const PartialProfile pp = extract_partial(full_profile, part.members());
  return part_nash(part, pp.choices);
}

EquilibriumSet brute_force_nash(const Game& game, std::uint64_t profile_cap) {
  EquilibriumSet out;
  const int n = game.num_players();
  out.members.resize(static_cast<std::size_t>(n));
  std::iota(out.members.begin(), out.members.end(), 0);
  const std::uint64_t space = game.num_profiles();
  check_cap(out.members, space, profile_cap, "brute_force_nash");

  // Full utility tensor, player-major.
  std::vector<std::vector<double>> u(static_cast<std::size_t>(n));
  StrategyProfile a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = u[static_cast<std::size_t>(i)];
    row.resize(space);
    for (std::uint64_t f = 0; f < space; ++f) {
      unflatten_profile(f, game.choice_counts(), a);
      row[f] = game.utility(i, a);
    }
  }

  // Strides of each player's axis in the flat index (last player
  // fastest, matching flatten_profile).
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] *
        static_cast<std::uint64_t>(game.choices(i + 1));
  }

  for (std::uint64_t f = 0; f < space; ++f) {
    ++out.evals_used;
    bool keep = true;
    for (int i = 0; i < n && keep; ++i) {
      const auto c = static_cast<std::uint64_t>(game.choices(i));
      const std::uint64_t s = stride[static_cast<std::size_t>(i)];
      const std::uint64_t digit = (f / s) % c;
      const std::uint64_t base = f - digit * s;
      double best = u[static_cast<std::size_t>(i)][base];
      for (std::uint64_t d = 1; d < c; ++d) {
        best = std::max(best, u[static_cast<std::size_t>(i)][base + d * s]);
      }
      keep = u[static_cast<std::size_t>(i)][f] >= best;
    }
    if (keep) {
      unflatten_profile(f, game.choice_counts(), a);
      out.profiles.push_back(a);
    }
  }
  return out;
}

ConsistencyResult consistent_equilibria(const Game& combined,
                                        const LinearDecomposition& decomposition,
                                        const ResidualReport& report) {
  if (!report.ok()) {
    throw std::invalid_argument(
        "consistent_equilibria: decomposition is not verified (residual " +
        std::to_string(report.max_abs_error) + " > tolerance " +
        std::to_string(report.tolerance) + ")");
  }
  for (std::size_t k = 0; k < decomposition.weights.size(); ++k) {
    if (decomposition.weights[k] < 0.0) {
      throw NegativeWeightError("part " + std::to_string(k) + " has weight " +
                                std::to_string(decomposition.weights[k]));
    }
  }
  if (decomposition.parts.empty()) {
    throw std::invalid_argument("consistent_equilibria: no parts");
  }

  ConsistencyResult result;

  // Part equilibria, reported in the caller's part order.
  for (const PartialGame& part : decomposition.parts) {
    result.part_equilibria.push_back(enumerate_nash(part));
    result.evals_used += result.part_equilibria.back().evals_used;
  }

  // Join smallest member sets first: cheap agreement failures prune the
  // candidate pool before the wide parts multiply it.
  std::vector<std::size_t> order(decomposition.parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return decomposition.parts[lhs].num_members() <
                            decomposition.parts[rhs].num_members();
                   });

  const int n = combined.num_players();
  constexpr Choice kUnset = -1;
  std::vector<StrategyProfile> candidates{
      StrategyProfile(static_cast<std::size_t>(n), kUnset)};
  for (std::size_t k : order) {
    const PartialGame& part = decomposition.parts[k];
    const EquilibriumSet& eq = result.part_equilibria[k];
    std::vector<StrategyProfile> merged;
    for (const StrategyProfile& cand : candidates) {
      for (const StrategyProfile& e : eq.profiles) {
        StrategyProfile next = cand;
        bool agrees = true;
        for (std::size_t m = 0; m < part.members().size(); ++m) {
          auto& slot = next[static_cast<std::size_t>(part.members()[m])];
          if (slot == kUnset) {
            slot = e[m];
          } else if (slot != e[m]) {
            agrees = false;
            break;
          }
        }
        if (agrees) merged.push_back(std::move(next));
      }
    }
    candidates = std::move(merged);
    if (candidates.empty()) break;
  }

  // Players in no part are unconstrained by the model (their utility is
  // zero up to the residual): expand their slots over all choices.
  std::vector<StrategyProfile> expanded;
  for (StrategyProfile& cand : candidates) {
    std::vector<StrategyProfile> fills{cand};
    for (int i = 0; i < n; ++i) {
      if (cand[static_cast<std::size_t>(i)] != kUnset) continue;
      std::vector<StrategyProfile> widened;
      if (fills.size() * static_cast<std::size_t>(combined.choices(i)) >
          kProfileCap) {
        throw CapacityError(
            "consistent_equilibria: unconstrained players expand past " +
            std::to_string(kProfileCap) + " candidates");
      }
      for (const StrategyProfile& fill : fills) {
        for (Choice c = 0; c < combined.choices(i); ++c) {
          StrategyProfile next = fill;
          next[static_cast<std::size_t>(i)] = c;
          widened.push_back(std::move(next));
        }
      }
      fills = std::move(widened);
    }
    expanded.insert(expanded.end(), fills.begin(), fills.end());
  }

  // Certification: a joined profile must be an equilibrium of the
  // combined game up to twice the model residual.
  const double cert_tol = 2.0 * report.max_abs_error;
  for (const StrategyProfile& cand : expanded) {
    ++result.certification_evals;
    if (!nash_within(combined, cand, cert_tol)) {
      throw std::logic_error(
          "consistent_equilibria: joined profile failed combined-game "
          "certification; the decomposition invariants are broken");
    }
    result.profiles.push_back(cand);
  }
  std::sort(result.profiles.begin(), result.profiles.end());
  result.profiles.erase(
      std::unique(result.profiles.begin(), result.profiles.end()),
      result.profiles.end());
  result.status = result.profiles.empty() ? "none-exist" : "found";
  return result;
}

ConsistencyResult consistent_equilibria(
    const Game& combined, const LinearDecomposition& decomposition) {
  return consistent_equilibria(combined, decomposition,
                               verify_linear(combined, decomposition));
}

}  // namespace gamedec
