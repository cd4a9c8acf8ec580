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

#ifndef QUASI_CONSTRUCTIONS_H_
#define QUASI_CONSTRUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasi/cayley.h"
#include "quasi/matrix.h"
#include "quasi/norms.h"

namespace quasi {

struct Provenance {
  std::string family;
  std::vector<std::pair<std::string, long long>> params;
  std::uint64_t seed = 0;
};

// Simple undirected d-regular graph.
struct RegularGraph {
  int n = 0;
  int degree = 0;
  Matrix adjacency;
  Provenance provenance;
};

// Throws ValidationError unless the matrix is a symmetric 0/1 matrix with
// zero diagonal and all row sums equal to `degree`.
void ValidateRegularGraph(const RegularGraph& g);

struct PaleyGraph {
  RegularGraph graph;
  CayleyMatrix cayley;  // Cay(Z_p, quadratic residues)
};

// p prime, p = 1 mod 4.
PaleyGraph MakePaleyGraph(int p);

RegularGraph MakeCycle(int n);
RegularGraph MakeComplete(int n);
RegularGraph MakePetersen();
// Graph with the given edges, as a symmetric 0/1 matrix.
Matrix FromEdgeList(int n, const std::vector<std::pair<int, int>>& edges);

inline constexpr int kMaxSamplerAttempts = 10'000;

// Simple graph with the given degree sequence by stub pairing. Each attempt
// pairs stubs one at a time, redrawing a partner that would create a loop or
// a repeated edge; an attempt that runs out of valid partners is discarded.
// Throws ValidationError for an odd degree sum or a degree >= n, and
// std::runtime_error when every attempt fails.
Matrix SampleDegreeSequence(const std::vector<int>& degrees, std::uint64_t seed);

RegularGraph MakeRandomRegular(int n, int d, std::uint64_t seed);

struct Example1Graph {
  RegularGraph graph;
  int t = 0;  // |U| = |V| = t = d/2
  std::vector<int> u, v, w1, w0;
  std::vector<double> eigenvector;  // 1_U - 1_V
  double eigenvalue = 0.0;          // -d/2
  double residual = 0.0;            // |A y - eigenvalue y|_inf
};

// d-regular graph with eigenvalue -d/2: U, V complete bipartite with
// |U| = |V| = d/2; each of the d^2/4 vertices of W1 joined to the two ends
// of its own U-V edge (lexicographic edge order, ascending W1 index); a
// random graph inside W = W1 + W0 with degrees d - 2 on W1 and d on W0.
Example1Graph MakeExample1(int d, int n, std::uint64_t seed);

// Bip(G, f): b(g, h) = f(g h^-1); same matrix as the Cayley one.
CayleyMatrix MakeBipartiteCayley(const GroupFunction& f);

struct BipartiteDeviation {
  double sigma = 0.0;  // largest singular value of B - p J
  std::optional<GrothendieckBracket> bracket;  // Cayley inputs only
  // ||B - pJ||_G = n ||B - pJ|| within 1e-6 (Cayley inputs only)
  std::optional<bool> grothendieck_equality;
};

BipartiteDeviation MeasureBipartiteDeviation(const Matrix& b, double p);
BipartiteDeviation MeasureBipartiteDeviation(const CayleyMatrix& b, double p,
                                             const BMConfig& cfg = {});

}  // namespace quasi

#endif  // QUASI_CONSTRUCTIONS_H_
