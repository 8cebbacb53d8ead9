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

#include "gamedec/sampler.hpp"

#include <stdexcept>
#include <string>

#include "gamedec/parallel.hpp"
#include "gamedec/rng.hpp"

namespace gamedec {
namespace {

// Stream tag separating harvested draws from per-subject draws; subjects
// are small non-negative ints, so no collision is possible.
constexpr std::uint64_t kHarvestStream = 0xffffffffffffffffULL;

StrategyProfile random_profile(const Game& game, Rng& rng) {
  StrategyProfile a(game.num_players());
  for (int p = 0; p < game.num_players(); ++p) {
    a[p] = static_cast<Choice>(rng.next_below(
        static_cast<std::uint64_t>(game.choices(p))));
  }
  return a;
}

// Resample one coordinate from the remaining choices (uniform over the
// other c-1 options). Caller guarantees c >= 2.
Choice resample_choice(Choice current, int c, Rng& rng) {
  const auto shift = 1 + rng.next_below(static_cast<std::uint64_t>(c - 1));
  return static_cast<Choice>(
      (static_cast<std::uint64_t>(current) + shift) % c);
}

void check_query(const Game& game, PlayerId subject, int samples_per_player) {
  if (subject < 0 || subject >= game.num_players()) {
    throw std::invalid_argument("sampler: subject " + std::to_string(subject) +
                                " out of range");
  }
  if (samples_per_player < 2) {
    throw std::invalid_argument(
        "sampler: samples_per_player must be at least 2, got " +
        std::to_string(samples_per_player));
  }
}

SampleMatrix empty_samples(const Game& game, int samples_per_player) {
  SampleMatrix m;
  m.n_players = game.num_players();
  m.samples_per_player = samples_per_player;
  m.row_column.assign(static_cast<std::size_t>(m.rows()), 0);
  m.row_delta.assign(static_cast<std::size_t>(m.rows()), 0.0);
  // Fixed row layout: L consecutive rows per deviating player.
  for (int j = 0; j < m.n_players; ++j) {
    for (int l = 0; l < samples_per_player; ++l) {
      m.row_column[static_cast<std::size_t>(j) * samples_per_player + l] = j;
    }
  }
  return m;
}

}  // namespace

Matrix SampleMatrix::dense() const {
  Matrix x(rows(), n_players);
  for (std::int64_t r = 0; r < rows(); ++r) {
    x(r, row_column[static_cast<std::size_t>(r)]) =
        row_delta[static_cast<std::size_t>(r)];
  }
  return x;
}

SampleMatrix sample_deviations(const Game& game, PlayerId subject,
                               int samples_per_player, std::uint64_t seed) {
  check_query(game, subject, samples_per_player);
  SampleMatrix m = empty_samples(game, samples_per_player);
  for (int j = 0; j < game.num_players(); ++j) {
    const int c = game.choices(j);
    if (c < 2) continue;  // cannot deviate; rows stay zero
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(subject),
                          static_cast<std::uint64_t>(j));
    for (int l = 0; l < samples_per_player; ++l) {
      StrategyProfile a = random_profile(game, rng);
      StrategyProfile b = a;
      b[j] = resample_choice(a[j], c, rng);
      const double delta = game.utility(subject, b) - game.utility(subject, a);
      m.row_delta[static_cast<std::size_t>(j) * samples_per_player + l] = delta;
    }
  }
  return m;
}

Matrix deviation_covariance(const SampleMatrix& samples) {
  const int n = samples.n_players;
  const std::int64_t rows = samples.rows();
  if (rows < 2) {
    throw std::invalid_argument("sampler: need at least 2 sample rows");
  }
  // One nonzero per row makes the centered Gram matrix closed-form in the
  // per-column sums S and square sums Q:
  //   C[j][j] = (Q_j - S_j^2 / M) / (M - 1)
  //   C[p][q] = -S_p * S_q / (M * (M - 1))   for p != q
  std::vector<double> s(static_cast<std::size_t>(n), 0.0);
  std::vector<double> q(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto col = static_cast<std::size_t>(
        samples.row_column[static_cast<std::size_t>(r)]);
    const double v = samples.row_delta[static_cast<std::size_t>(r)];
    s[col] += v;
    q[col] += v * v;
  }
  const double m = static_cast<double>(rows);
  Matrix c(n, n);
  for (int p = 0; p < n; ++p) {
    double diag = (q[static_cast<std::size_t>(p)] -
                   s[static_cast<std::size_t>(p)] *
                       s[static_cast<std::size_t>(p)] / m) /
                  (m - 1.0);
    if (diag == 0.0) diag = 0.0;  // scrub negative zero
    c(p, p) = diag;
    for (int r = p + 1; r < n; ++r) {
      double off = -s[static_cast<std::size_t>(p)] *
                   s[static_cast<std::size_t>(r)] / (m * (m - 1.0));
      if (off == 0.0) off = 0.0;
      c(p, r) = off;
      c(r, p) = off;
    }
  }
  return c;
}

InteractionMatrix interaction_matrix_from(const SampleMatrix& samples,
                                          PlayerId subject) {
  InteractionMatrix im;
  im.subject = subject;
  im.samples_per_player = samples.samples_per_player;
  im.sample_rows = samples.rows();
  im.c = deviation_covariance(samples);
  return im;
}

InteractionMatrix interaction_matrix(const Game& game, PlayerId subject,
                                     int samples_per_player,
                                     std::uint64_t seed) {
  return interaction_matrix_from(
      sample_deviations(game, subject, samples_per_player, seed), subject);
}

BatchSample all_interaction_matrices(const Game& game, int samples_per_player,
                                     std::uint64_t seed, SamplingMode mode,
                                     int threads) {
  const int n = game.num_players();
  if (n == 0) throw std::invalid_argument("sampler: game has no players");
  check_query(game, 0, samples_per_player);

  BatchSample batch;
  const auto evals_before = game.eval_count();

  if (mode == SamplingMode::per_subject) {
    batch.samples.resize(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](int i) {
      batch.samples[static_cast<std::size_t>(i)] =
          sample_deviations(game, i, samples_per_player, seed);
    });
    for (int j = 0; j < n; ++j) {
      if (game.choices(j) >= 2) {
        batch.stats.pair_draws += static_cast<std::uint64_t>(n) *
                                  static_cast<std::uint64_t>(samples_per_player);
      }
    }
  } else {
    // Harvest mode: each deviation pair feeds every subject's matrix, so
    // the pair budget drops from N^2*L to N*L.
    for (int i = 0; i < n; ++i) {
      batch.samples.push_back(empty_samples(game, samples_per_player));
    }
    parallel_for(n, threads, [&](int j) {
      const int c = game.choices(j);
      if (c < 2) return;
      Rng rng = Rng::derive(seed, kHarvestStream, static_cast<std::uint64_t>(j));
      for (int l = 0; l < samples_per_player; ++l) {
        StrategyProfile a = random_profile(game, rng);
        StrategyProfile b = a;
        b[j] = resample_choice(a[j], c, rng);
        const std::size_t row =
            static_cast<std::size_t>(j) * samples_per_player + l;
        for (int i = 0; i < n; ++i) {
          const double delta =
              game.utility(i, b) - game.utility(i, a);
          batch.samples[static_cast<std::size_t>(i)].row_delta[row] = delta;
        }
      }
    });
    for (int j = 0; j < n; ++j) {
      if (game.choices(j) >= 2) {
        batch.stats.pair_draws +=
            static_cast<std::uint64_t>(samples_per_player);
      }
    }
  }

  batch.stats.oracle_calls =
      static_cast<std::uint64_t>(game.eval_count() - evals_before);
  batch.matrices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    batch.matrices.push_back(
        interaction_matrix_from(batch.samples[static_cast<std::size_t>(i)], i));
  }
  return batch;
}

}  // namespace gamedec
