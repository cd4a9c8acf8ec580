// Copyright 2026 The Quasi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUASI_LINALG_H_
#define QUASI_LINALG_H_

#include <cstdint>
#include <vector>

#include "quasi/matrix.h"

namespace quasi {

struct SingularTriplet {
  double value = 0.0;
  std::vector<double> left;   // unit, length rows
  std::vector<double> right;  // unit, length cols
};

struct PowerIterationOptions {
  double tolerance = 1e-12;  // residual of the Gram eigenpair, relative
  int max_iterations = 200'000;
  std::uint64_t seed = 0;
};

// Top singular triplet by power iteration on A^T A from a seeded start.
// A zero matrix yields value 0 and the canonical basis vectors.
SingularTriplet TopSingularTriplet(const Matrix& a,
                                   const PowerIterationOptions& opts = {});

struct EigenDecomposition {
  std::vector<double> values;                // order matches vectors
  std::vector<std::vector<double>> vectors;  // unit eigenvectors
};

// Cyclic Jacobi rotations on a symmetric matrix, run until the off-diagonal
// Frobenius mass drops below tol * ||A||_F. Eigenpairs come back in the
// diagonal order the sweep leaves them in (unsorted).
EigenDecomposition JacobiEigen(const Matrix& a, double tol = 1e-12,
                               int max_sweeps = 100);

}  // namespace quasi

#endif  // QUASI_LINALG_H_
