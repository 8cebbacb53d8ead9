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

#include "gamedec/eigen_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gamedec {
namespace {

constexpr double kOffDiagTol = 1e-12;   // relative to the Frobenius norm
constexpr double kSymmetryTol = 1e-9;   // relative to the Frobenius norm
constexpr int kMaxSweeps = 128;

double max_off_diagonal(const Matrix& a) {
  double best = 0.0;
  for (int p = 0; p < a.rows(); ++p) {
    for (int q = p + 1; q < a.cols(); ++q) {
      best = std::max(best, std::abs(a(p, q)));
    }
  }
  return best;
}

// One two-sided rotation zeroing a(p, q), accumulating the transform
// into the columns of v.
void rotate(Matrix& a, Matrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = c * arp - s * arq;
    a(p, r) = a(r, p);
    a(r, q) = s * arp + c * arq;
    a(q, r) = a(r, q);
  }
  for (int r = 0; r < v.rows(); ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

void fix_sign(std::vector<double>& vec) {
  std::size_t arg = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (std::abs(vec[i]) > best) {
      best = std::abs(vec[i]);
      arg = i;
    }
  }
  if (vec[arg] < 0.0) {
    for (double& x : vec) x = -x;
  }
  for (double& x : vec) {
    if (x == 0.0) x = 0.0;  // scrub negative zero
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("jacobi_eigen: matrix must be square");
  }
  const int n = a.rows();
  const double fro = a.frobenius_norm();
  if (a.max_abs_asymmetry() > kSymmetryTol * std::max(fro, 1e-300)) {
    throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
  }

  Matrix work = a;
  // Re-symmetrize so tiny representational asymmetry cannot drift.
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double m = 0.5 * (work(p, q) + work(q, p));
      work(p, q) = m;
      work(q, p) = m;
    }
  }
  Matrix v = Matrix::identity(n);
  const double stop = kOffDiagTol * fro;
  if (fro > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (max_off_diagonal(work) <= stop) break;
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          if (std::abs(work(p, q)) > stop) rotate(work, v, p, q);
        }
      }
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return work(static_cast<int>(lhs),
                                 static_cast<int>(lhs)) >
                            work(static_cast<int>(rhs),
                                 static_cast<int>(rhs));
                   });

  SymmetricEigen out;
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors.reserve(static_cast<std::size_t>(n));
  for (std::size_t k : order) {
    out.values.push_back(
        work(static_cast<int>(k), static_cast<int>(k)));
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      vec[static_cast<std::size_t>(r)] = v(r, static_cast<int>(k));
    }
    fix_sign(vec);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace gamedec
