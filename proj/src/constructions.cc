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

#include "quasi/constructions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quasi/rng.h"

namespace quasi {
namespace {

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Erdos-Gallai.
bool IsGraphical(std::vector<int> degrees) {
  std::sort(degrees.rbegin(), degrees.rend());
  long long total = 0;
  for (int d : degrees) total += d;
  if (total % 2) return false;
  const int n = static_cast<int>(degrees.size());
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += degrees[k - 1];
    long long rest = 0;
    for (int i = k; i < n; ++i) rest += std::min(degrees[i], k);
    if (prefix > static_cast<long long>(k) * (k - 1) + rest) return false;
  }
  return true;
}

}  // namespace

void ValidateRegularGraph(const RegularGraph& g) {
  const Matrix& a = g.adjacency;
  if (!a.square() || a.rows() != g.n) throw ValidationError("adjacency is not n x n");
  for (int i = 0; i < g.n; ++i) {
    if (a(i, i) != 0.0) throw ValidationError("nonzero diagonal at " + std::to_string(i));
    int sum = 0;
    for (int j = 0; j < g.n; ++j) {
      if (a(i, j) != 0.0 && a(i, j) != 1.0) throw ValidationError("adjacency is not 0/1");
      if (a(i, j) != a(j, i)) throw ValidationError("adjacency is not symmetric");
      sum += static_cast<int>(a(i, j));
    }
    if (sum != g.degree) {
      throw ValidationError("vertex " + std::to_string(i) + " has degree " +
                            std::to_string(sum) + ", expected " +
                            std::to_string(g.degree));
    }
  }
}

Matrix FromEdgeList(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw ValidationError("edge list needs n >= 1");
  Matrix a(n, n);
  for (auto [s, t] : edges) {
    if (s < 0 || s >= n || t < 0 || t >= n) {
      throw ValidationError("edge (" + std::to_string(s) + ", " + std::to_string(t) +
                            ") is out of range");
    }
    a(s, t) = 1.0;
    a(t, s) = 1.0;
  }
  return a;
}

PaleyGraph MakePaleyGraph(int p) {
  if (!IsPrime(p)) throw ValidationError("Paley graph: " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) {
    throw ValidationError("Paley graph: " + std::to_string(p) +
                          " is not 1 mod 4, so the residues are not symmetric");
  }
  std::vector<int> residues;
  std::vector<char> is_residue(p, 0);
  for (long long x = 1; x < p; ++x) is_residue[(x * x) % p] = 1;
  for (int r = 1; r < p; ++r)
    if (is_residue[r]) residues.push_back(r);
  CayleyMatrix cay = CayleyFromSet(Cyclic(p), residues);
  RegularGraph g{p, (p - 1) / 2, cay.matrix, {"paley", {{"p", p}}, 0}};
  ValidateRegularGraph(g);
  return PaleyGraph{std::move(g), std::move(cay)};
}

RegularGraph MakeCycle(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  RegularGraph g{n, 2, FromEdgeList(n, edges), {"cycle", {{"n", n}}, 0}};
  ValidateRegularGraph(g);
  return g;
}

RegularGraph MakeComplete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  Matrix a = Matrix::Ones(n, n) - Matrix::Identity(n);
  return RegularGraph{n, n - 1, std::move(a), {"complete", {{"n", n}}, 0}};
}

RegularGraph MakePetersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  RegularGraph g{10, 3, FromEdgeList(10, edges), {"petersen", {}, 0}};
  ValidateRegularGraph(g);
  return g;
}

Matrix SampleDegreeSequence(const std::vector<int>& degrees, std::uint64_t seed) {
  const int n = static_cast<int>(degrees.size());
  long long total = 0;
  for (int d : degrees) {
    if (d < 0 || d >= std::max(n, 1)) {
      throw ValidationError("degree " + std::to_string(d) + " is impossible on " +
                            std::to_string(n) + " vertices");
    }
    total += d;
  }
  if (total % 2) throw ValidationError("degree sum is odd");
  if (!IsGraphical(degrees)) throw ValidationError("degree sequence is not graphical");
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), degrees[v], v);
  CounterRng rng(seed, 0x73616d70);
  for (int attempt = 0; attempt < kMaxSamplerAttempts; ++attempt) {
    Matrix a(n, n);
    std::vector<int> open = stubs;
    std::vector<int> valid;
    bool ok = true;
    while (!open.empty() && ok) {
      const std::size_t pick = rng.Below(open.size());
      const int s = open[pick];
      open[pick] = open.back();
      open.pop_back();
      valid.clear();
      for (std::size_t i = 0; i < open.size(); ++i) {
        const int t = open[i];
        if (t != s && a(s, t) == 0.0) valid.push_back(static_cast<int>(i));
      }
      if (valid.empty()) {
        ok = false;
        break;
      }
      const int j = valid[rng.Below(valid.size())];
      const int t = open[j];
      open[j] = open.back();
      open.pop_back();
      a(s, t) = a(t, s) = 1.0;
    }
    if (ok) return a;
  }
  throw std::runtime_error("degree-sequence sampler exhausted " +
                           std::to_string(kMaxSamplerAttempts) +
                           " attempts; try another seed");
}

RegularGraph MakeRandomRegular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) {
    throw ValidationError("random regular graph needs 0 <= d < n");
  }
  if ((static_cast<long long>(n) * d) % 2) throw ValidationError("n d must be even");
  RegularGraph g{n, d, SampleDegreeSequence(std::vector<int>(n, d), seed),
                 {"random-regular", {{"n", n}, {"d", d}}, seed}};
  ValidateRegularGraph(g);
  return g;
}

Example1Graph MakeExample1(int d, int n, std::uint64_t seed) {
  if (d < 2 || d % 2) throw ValidationError("example1: d must be even and positive");
  const int t = d / 2;
  const int w1_size = t * t;
  if (n < 2 * t + w1_size) {
    throw ValidationError("example1: n = " + std::to_string(n) + " < 2t + d^2/4 = " +
                          std::to_string(2 * t + w1_size));
  }
  const int w_size = n - 2 * t;
  const int w0_size = w_size - w1_size;
  std::vector<int> inner_degrees(w_size);
  for (int i = 0; i < w_size; ++i) inner_degrees[i] = i < w1_size ? d - 2 : d;
  if (w0_size > 0 && d >= w_size) {
    throw ValidationError("example1: W0 vertices need degree " + std::to_string(d) +
                          " inside W, which has only " + std::to_string(w_size) +
                          " vertices");
  }
  if (w1_size > 0 && d - 2 >= w_size) {
    throw ValidationError("example1: W1 vertices need degree " + std::to_string(d - 2) +
                          " inside W, which has only " + std::to_string(w_size) +
                          " vertices");
  }
  if (!IsGraphical(inner_degrees)) {
    throw ValidationError("example1: degree sequence inside W is not graphical");
  }

  Example1Graph ex;
  ex.t = t;
  for (int i = 0; i < t; ++i) ex.u.push_back(i);
  for (int i = 0; i < t; ++i) ex.v.push_back(t + i);
  for (int i = 0; i < w1_size; ++i) ex.w1.push_back(2 * t + i);
  for (int i = 0; i < w0_size; ++i) ex.w0.push_back(2 * t + w1_size + i);

  Matrix a(n, n);
  int w1_next = 0;
  for (int u : ex.u) {
    for (int v : ex.v) {
      a(u, v) = a(v, u) = 1.0;
      const int w = ex.w1[w1_next++];
      a(w, u) = a(u, w) = 1.0;
      a(w, v) = a(v, w) = 1.0;
    }
  }
  const Matrix inner = SampleDegreeSequence(inner_degrees, seed);
  for (int i = 0; i < w_size; ++i)
    for (int j = 0; j < w_size; ++j)
      if (inner(i, j) != 0.0) a(2 * t + i, 2 * t + j) = 1.0;

  ex.graph = RegularGraph{n, d, std::move(a),
                          {"example1", {{"d", d}, {"n", n}}, seed}};
  ValidateRegularGraph(ex.graph);

  ex.eigenvalue = -static_cast<double>(t);
  ex.eigenvector.assign(n, 0.0);
  for (int u : ex.u) ex.eigenvector[u] = 1.0;
  for (int v : ex.v) ex.eigenvector[v] = -1.0;
  const std::vector<double> ay = Apply(ex.graph.adjacency, ex.eigenvector);
  for (int i = 0; i < n; ++i) {
    ex.residual = std::max(ex.residual, std::abs(ay[i] - ex.eigenvalue * ex.eigenvector[i]));
  }
  return ex;
}

CayleyMatrix MakeBipartiteCayley(const GroupFunction& f) { return MakeCayleyMatrix(f); }

BipartiteDeviation MeasureBipartiteDeviation(const Matrix& b, double p) {
  BipartiteDeviation out;
  out.sigma = SpectralNorm(b - p * Matrix::Ones(b.rows(), b.cols()));
  return out;
}

BipartiteDeviation MeasureBipartiteDeviation(const CayleyMatrix& b, double p,
                                             const BMConfig& cfg) {
  const Matrix centered = b.matrix - p * Matrix::Ones(b.matrix.rows(), b.matrix.cols());
  BipartiteDeviation out;
  out.sigma = SpectralNorm(centered);
  out.bracket = GrothendieckBounds(centered, cfg);
  const double target = b.matrix.rows() * out.sigma;
  out.grothendieck_equality =
      out.bracket->lower >= (1.0 - 1e-6) * target - 1e-12 &&
      out.bracket->upper <= (1.0 + 1e-6) * target + 1e-12;
  return out;
}

}  // namespace quasi
