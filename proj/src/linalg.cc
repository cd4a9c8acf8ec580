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

#include <cmath>

#include "quasi/rng.h"

namespace quasi {
namespace {

double Norm2(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

void Scale(std::vector<double>& v, double s) {
  for (double& x : v) x *= s;
}

}  // namespace

SingularTriplet TopSingularTriplet(const Matrix& a,
                                   const PowerIterationOptions& opts) {
  const int m = a.rows();
  const int n = a.cols();
  SingularTriplet out;
  out.left.assign(m, 0.0);
  out.right.assign(n, 0.0);
  if (m == 0 || n == 0) return out;
  if (MaxAbsEntry(a) == 0.0) {
    out.left[0] = 1.0;
    out.right[0] = 1.0;
    return out;
  }
  CounterRng rng(opts.seed, 0x5eed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.Normal();
  Scale(v, 1.0 / Norm2(v));

  double mu = 0.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> av = Apply(a, v);
    std::vector<double> w = ApplyTransposed(a, av);  // Gram * v
    mu = 0.0;
    for (int j = 0; j < n; ++j) mu += v[j] * w[j];
    double res = 0.0;
    for (int j = 0; j < n; ++j) {
      const double r = w[j] - mu * v[j];
      res += r * r;
    }
    res = std::sqrt(res);
    const double wn = Norm2(w);
    if (wn == 0.0) break;  // v landed in the null space; mu = 0
    Scale(w, 1.0 / wn);
    v = std::move(w);
    if (res <= opts.tolerance * mu) break;
  }
  std::vector<double> u = Apply(a, v);
  const double sigma = Norm2(u);
  out.value = sigma;
  if (sigma > 0.0) Scale(u, 1.0 / sigma);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

EigenDecomposition JacobiEigen(const Matrix& a_in, double tol, int max_sweeps) {
  if (!a_in.square()) throw ValidationError("JacobiEigen needs a square matrix");
  const int n = a_in.rows();
  Matrix a = a_in;
  Matrix v = Matrix::Identity(n);
  const double scale = FrobeniusNorm(a_in);
  auto off_mass = [&] {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
  };
  for (int sweep = 0; sweep < max_sweeps && off_mass() > tol * scale; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(i, i);
    for (int k = 0; k < n; ++k) out.vectors[i][k] = v(k, i);
  }
  return out;
}

}  // namespace quasi
