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

#include "quasi/linalg.h"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "quasi/rng.h"

namespace quasi {
namespace {

Matrix RandomMatrix(int m, int n, CounterRng& rng) {
  Matrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.Normal();
  return a;
}

Eigen::MatrixXd ToEigen(const Matrix& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

TEST(TopSingularTriplet, MatchesEigenSvd) {
  CounterRng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng.Below(12));
    const int n = 1 + static_cast<int>(rng.Below(12));
    const Matrix a = RandomMatrix(m, n, rng);
    const SingularTriplet t = TopSingularTriplet(a);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ToEigen(a));
    EXPECT_NEAR(t.value, svd.singularValues()(0), 1e-10 * svd.singularValues()(0));
    const std::vector<double> av = Apply(a, t.right);
    for (int i = 0; i < m; ++i) EXPECT_NEAR(av[i], t.value * t.left[i], 1e-8);
  }
}

TEST(TopSingularTriplet, ZeroMatrix) {
  EXPECT_EQ(TopSingularTriplet(Matrix(3, 4)).value, 0.0);
}

TEST(TopSingularTriplet, RepeatedTopValue) {
  // Identity has every singular value equal to 1.
  EXPECT_NEAR(TopSingularTriplet(Matrix::Identity(6)).value, 1.0, 1e-12);
}

TEST(JacobiEigen, MatchesEigenSolver) {
  CounterRng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(16));
    Matrix a = RandomMatrix(n, n, rng);
    a = a + a.Transposed();
    EigenDecomposition d = JacobiEigen(a);
    std::vector<double> ours = d.values;
    std::sort(ours.begin(), ours.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ToEigen(a));
    for (int i = 0; i < n; ++i) EXPECT_NEAR(ours[i], es.eigenvalues()(i), 1e-10);
    for (int k = 0; k < n; ++k) {
      const std::vector<double> av = Apply(a, d.vectors[k]);
      for (int i = 0; i < n; ++i) EXPECT_NEAR(av[i], d.values[k] * d.vectors[k][i], 1e-9);
    }
  }
}

}  // namespace
}  // namespace quasi
