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

#include "gamedec/matrix.hpp"

#include <vector>

namespace gamedec {

/// Eigendecomposition of a symmetric matrix: values in descending order,
/// vectors[k] the unit eigenvector of values[k]. Each vector's
/// largest-magnitude entry is made non-negative so output is sign-stable.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations. Converges when every off-diagonal magnitude
/// drops below 1e-12 times the Frobenius norm (or everything is zero).
/// Throws std::invalid_argument if `a` is not square or its asymmetry
/// exceeds 1e-9 times the Frobenius norm.
SymmetricEigen jacobi_eigen(const Matrix& a);

}  // namespace gamedec
