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

#ifndef QUASI_CAYLEY_H_
#define QUASI_CAYLEY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "quasi/group.h"
#include "quasi/matrix.h"

namespace quasi {

// Weighted Cayley graph Cay(G, f): a(g, h) = f(g h^-1).
struct CayleyMatrix {
  GroupPtr group;
  GroupFunction f;
  Matrix matrix;
  bool symmetric = false;  // f(g) == f(g^-1) for all g
};

CayleyMatrix MakeCayleyMatrix(const GroupFunction& f);

// Cay(G, S) with f the indicator of S. Duplicate indices are ignored.
CayleyMatrix CayleyFromSet(GroupPtr group, const std::vector<int>& set);

inline constexpr int kMaxAutomorphismSearchDegree = 64;

// One automorphism per vertex t mapping the base vertex 0 to t, plus the
// group those generate (absent when the closure exceeds the cap).
struct TransitiveCertificate {
  int base = 0;
  std::vector<Permutation> witnesses;  // witnesses[t](0) == t
  std::optional<PermGroup> subgroup;
};

bool IsAutomorphism(const Matrix& a, const Permutation& p);

// Backtracking search, vertices assigned in ascending order, candidate
// images tried in ascending order and pruned by row/column value multisets.
// Each witness is the lexicographically first automorphism sending 0 to t.
// Returns nullopt when some vertex is unreachable. Throws CapacityError for
// n > 64.
std::optional<TransitiveCertificate> FindTransitiveAutomorphisms(
    const Matrix& a, std::size_t closure_cap = kDefaultClosureCap);

// Group function from a transitive automorphism group, f(g) = a(g(0), 0).
struct LiftedFunction {
  GroupPtr group;  // multiplication table of `perms`, same element order
  GroupFunction f;
};

// Throws ValidationError naming (s, t, g) when some element is not an
// automorphism, or when the group is not transitive.
LiftedFunction LiftToGroup(const Matrix& a, const PermGroup& perms);

// A - (d/n) J.
Matrix CenterRegular(const Matrix& a, double d);

}  // namespace quasi

#endif  // QUASI_CAYLEY_H_
