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
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/matrix.hpp"

namespace gamedec {

/// The N*L-by-N deviation-difference matrix of one subject. Each row has
/// at most one nonzero entry, in the deviating player's column; rows are
/// grouped by deviating player (L consecutive rows per player). Players
/// with a single choice cannot deviate, so their rows stay zero.
///
/// The one-nonzero-per-row layout makes the covariance near-diagonal:
/// off-diagonal entries arise only from the column-mean cross terms.
struct SampleMatrix {
  int n_players = 0;
  int samples_per_player = 0;            // L
  std::vector<PlayerId> row_column;      // deviating player per row
  std::vector<double> row_delta;         // delta of the subject per row

  std::int64_t rows() const {
    return static_cast<std::int64_t>(n_players) * samples_per_player;
  }
  double entry(std::int64_t row, int col) const {
    return row_column[row] == col ? row_delta[row] : 0.0;
  }
  /// Dense copy, mainly for tests.
  Matrix dense() const;
};

/// Variance-covariance matrix of one subject's deviation differences:
/// C = (X - Xbar)^T (X - Xbar) / (NL - 1) with Xbar the replicated
/// column means of X.
struct InteractionMatrix {
  PlayerId subject = 0;
  int samples_per_player = 0;  // L
  std::int64_t sample_rows = 0;
  Matrix c;
};

enum class SamplingMode {
  /// One deviation pair per (subject, deviating player, repeat): the
  /// verbatim per-subject procedure.
  per_subject,
  /// One deviation pair per (deviating player, repeat), with every
  /// subject's delta harvested from the same pair. Cuts pair draws from
  /// N^2*L to N*L; the per-subject matrices keep N*L rows each.
  harvest,
};

struct SampleStats {
  std::uint64_t pair_draws = 0;    // deviation pairs (a, b) drawn
  std::uint64_t oracle_calls = 0;  // utility evaluations spent
};

/// Deviation sampling for one subject (matrix rows only). RNG streams
/// derive from (seed, subject, deviating player), so results do not
/// depend on scheduling. Requires L >= 2.
SampleMatrix sample_deviations(const Game& game, PlayerId subject,
                               int samples_per_player, std::uint64_t seed);

/// Covariance of a sample matrix. Row/column j is exactly zero whenever
/// column j of the samples is all zero, and the result is exactly
/// symmetric by construction.
Matrix deviation_covariance(const SampleMatrix& samples);

InteractionMatrix interaction_matrix_from(const SampleMatrix& samples,
                                          PlayerId subject);

/// Full per-subject pipeline: sample then covariance.
InteractionMatrix interaction_matrix(const Game& game, PlayerId subject,
                                     int samples_per_player, std::uint64_t seed);

struct BatchSample {
  std::vector<SampleMatrix> samples;          // one per subject
  std::vector<InteractionMatrix> matrices;    // one per subject
  SampleStats stats;
};

/// Interaction matrices of every player. In harvest mode all subjects
/// share each deviation pair; streams derive from (seed, deviating
/// player) only, so the result is identical for any worker count.
BatchSample all_interaction_matrices(const Game& game, int samples_per_player,
                                     std::uint64_t seed,
                                     SamplingMode mode = SamplingMode::harvest,
                                     int threads = 1);

}  // namespace gamedec
