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

#include "quasi/matrix.h"

#include <cmath>

namespace quasi {

std::vector<double> Apply(const Matrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.cols()) {
    throw ValidationError("Apply: vector length mismatch");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    const auto r = a.row(i);
    for (int j = 0; j < a.cols(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> ApplyTransposed(const Matrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.rows()) {
    throw ValidationError("ApplyTransposed: vector length mismatch");
  }
  std::vector<double> y(a.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const auto r = a.row(i);
    for (int j = 0; j < a.cols(); ++j) y[j] += r[j] * xi;
  }
  return y;
}

double FrobeniusNorm(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v * v;
  return std::sqrt(acc);
}

double MaxAbsEntry(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

bool IsSymmetric(const Matrix& a, double tol) {
  if (!a.square()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

Matrix Realify(const CMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  Matrix r(2 * m, 2 * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex v = a(i, j);
      r(i, j) = v.real();
      r(i, j + n) = -v.imag();
      r(i + m, j) = v.imag();
      r(i + m, j + n) = v.real();
    }
  }
  return r;
}

}  // namespace quasi
