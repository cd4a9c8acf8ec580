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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quasi/cayley.h"
#include "quasi/errors.h"
#include "quasi/norms.h"
#include "quasi/rng.h"

namespace quasi {
namespace {

bool IsSimple01Symmetric(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0.0) return false;
    for (int j = 0; j < a.cols(); ++j)
      if ((a(i, j) != 0.0 && a(i, j) != 1.0) || a(i, j) != a(j, i)) return false;
  }
  return true;
}

std::vector<int> RowSums(const Matrix& a) {
  std::vector<int> s(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s[i] += static_cast<int>(a(i, j));
  return s;
}

TEST(Paley, ThirteenSecondEigenvalue) {
  const PaleyGraph p = MakePaleyGraph(13);
  EXPECT_EQ(p.graph.n, 13);
  EXPECT_EQ(p.graph.degree, 6);
  ValidateRegularGraph(p.graph);
  const Spectrum s = SymmetricSpectrum(p.graph.adjacency);
  EXPECT_NEAR(s.eigenvalues.front(), 6.0, 1e-12);
  EXPECT_NEAR(s.lambda2, (1 + std::sqrt(13.0)) / 2, 1e-12);
}

TEST(Paley, SeventeenSecondEigenvalue) {
  const PaleyGraph p = MakePaleyGraph(17);
  EXPECT_EQ(p.graph.degree, 8);
  EXPECT_NEAR(SymmetricSpectrum(p.graph.adjacency).lambda2, (1 + std::sqrt(17.0)) / 2, 1e-12);
}

TEST(Paley, FiveIsTheFiveCycle) {
  const PaleyGraph p = MakePaleyGraph(5);
  const Matrix c = MakeCycle(5).adjacency;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(p.graph.adjacency(i, j), c(i, j));
}

TEST(Paley, ResiduesAndCayleyAgree) {
  const PaleyGraph p = MakePaleyGraph(13);
  const std::set<int> residues = {1, 3, 4, 9, 10, 12};
  for (int x = 0; x < 13; ++x) EXPECT_EQ(p.cayley.f(x), residues.count(x) ? 1.0 : 0.0);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) EXPECT_EQ(p.cayley.matrix(i, j), p.graph.adjacency(i, j));
  EXPECT_TRUE(FindTransitiveAutomorphisms(p.graph.adjacency).has_value());
}

TEST(Paley, RejectsBadPrimes) {
  for (int p : {7, 3, 2, 9, 21, 1, 0, -5}) EXPECT_THROW(MakePaleyGraph(p), ValidationError) << p;
}

TEST(SmallGraphs, CycleCompletePetersen) {
  const RegularGraph c = MakeCycle(6);
  EXPECT_EQ(c.degree, 2);
  ValidateRegularGraph(c);
  const RegularGraph k = MakeComplete(5);
  EXPECT_EQ(k.degree, 4);
  ValidateRegularGraph(k);
  const RegularGraph p = MakePetersen();
  EXPECT_EQ(p.n, 10);
  EXPECT_EQ(p.degree, 3);
  ValidateRegularGraph(p);
  const Spectrum s = SymmetricSpectrum(p.adjacency);
  // Spectrum 3, -2 (x4), 1 (x5), ordered by absolute value.
  EXPECT_NEAR(s.lambda2, 2.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1], -2.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues.back(), 1.0, 1e-12);
}

TEST(SmallGraphs, FromEdgeListAndValidation) {
  const Matrix a = FromEdgeList(3, {{0, 1}, {1, 2}, {2, 0}});
  RegularGraph g{3, 2, a, {}};
  ValidateRegularGraph(g);
  g.degree = 1;
  EXPECT_THROW(ValidateRegularGraph(g), ValidationError);
  EXPECT_EQ(FromEdgeList(3, {{0, 0}})(0, 0), 1.0);
  EXPECT_THROW(FromEdgeList(3, {{0, 3}}), ValidationError);
}

TEST(Example1, DegreeEightOnTwentyFour) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Example1Graph e = MakeExample1(8, 24, seed);
    ValidateRegularGraph(e.graph);
    EXPECT_EQ(e.t, 4);
    EXPECT_EQ(e.u.size(), 4u);
    EXPECT_EQ(e.v.size(), 4u);
    EXPECT_EQ(e.w1.size(), 16u);
    EXPECT_EQ(e.w0.size(), 0u);
    EXPECT_EQ(e.eigenvalue, -4.0);
    EXPECT_LE(e.residual, 1e-12);
    // Independent check of A y = -d/2 y.
    const Matrix& a = e.graph.adjacency;
    for (int i = 0; i < 24; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 24; ++j) acc += a(i, j) * e.eigenvector[j];
      EXPECT_NEAR(acc, -4.0 * e.eigenvector[i], 1e-12);
    }
    // U and V are independent sets and fully joined to each other.
    for (int x : e.u)
      for (int y : e.v) EXPECT_EQ(a(x, y), 1.0);
    for (int x : e.u)
      for (int y : e.u) EXPECT_EQ(a(x, y), 0.0);
  }
}

TEST(Example1, DegreeFourOnTwelveWithFreeVertices) {
  const Example1Graph e = MakeExample1(4, 12, 3);
  ValidateRegularGraph(e.graph);
  EXPECT_EQ(e.t, 2);
  EXPECT_EQ(e.w1.size(), 4u);
  EXPECT_EQ(e.w0.size(), 4u);
  EXPECT_EQ(e.eigenvalue, -2.0);
  EXPECT_LE(e.residual, 1e-12);
  // Eigenvalue -d/2 appears in the spectrum.
  const Spectrum s = SymmetricSpectrum(e.graph.adjacency);
  const bool found = std::any_of(s.eigenvalues.begin(), s.eigenvalues.end(),
                                 [](double l) { return std::abs(l + 2.0) < 1e-9; });
  EXPECT_TRUE(found);
}

TEST(Example1, Deterministic) {
  const Example1Graph a = MakeExample1(8, 30, 11), b = MakeExample1(8, 30, 11);
  EXPECT_EQ(a.graph.adjacency.data(), b.graph.adjacency.data());
}

TEST(Example1, RejectsInfeasibleParameters) {
  EXPECT_THROW(MakeExample1(8, 20, 0), ValidationError);  // n < d + d^2/4
  EXPECT_THROW(MakeExample1(5, 40, 0), ValidationError);  // odd d
  EXPECT_THROW(MakeExample1(0, 10, 0), ValidationError);
}

TEST(RandomRegular, PerfectMatching) {
  const RegularGraph g = MakeRandomRegular(4, 1, 0);
  ValidateRegularGraph(g);
  for (int s : RowSums(g.adjacency)) EXPECT_EQ(s, 1);
}

TEST(RandomRegular, CompleteGraphIsForced) {
  const RegularGraph g = MakeRandomRegular(6, 5, 2);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(g.adjacency(i, j), i == j ? 0.0 : 1.0);
}

TEST(RandomRegular, CubicOnSixteen) {
  const RegularGraph g = MakeRandomRegular(16, 3, 7);
  ValidateRegularGraph(g);
  EXPECT_TRUE(IsSimple01Symmetric(g.adjacency));
  for (int s : RowSums(g.adjacency)) EXPECT_EQ(s, 3);
  EXPECT_EQ(g.provenance.seed, 7u);
}

TEST(RandomRegular, DeterministicAndSeedSensitive) {
  const RegularGraph a = MakeRandomRegular(40, 5, 1), b = MakeRandomRegular(40, 5, 1);
  EXPECT_EQ(a.adjacency.data(), b.adjacency.data());
  bool differs = false;
  for (std::uint64_t s = 2; s < 6 && !differs; ++s)
    differs = MakeRandomRegular(40, 5, s).adjacency.data() != a.adjacency.data();
  EXPECT_TRUE(differs);
}

TEST(RandomRegular, Errors) {
  EXPECT_THROW(MakeRandomRegular(5, 3, 0), ValidationError);  // odd n d
  EXPECT_THROW(MakeRandomRegular(4, 4, 0), ValidationError);  // d >= n
  EXPECT_THROW(SampleDegreeSequence({1, 1, 1}, 0), ValidationError);
}

TEST(RandomRegular, DegreeSequence) {
  const std::vector<int> deg = {3, 3, 2, 2, 1, 1};
  const Matrix a = SampleDegreeSequence(deg, 4);
  EXPECT_TRUE(IsSimple01Symmetric(a));
  EXPECT_EQ(RowSums(a), deg);
}

TEST(RandomRegular, ManySeedsStaySimple) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RegularGraph g = MakeRandomRegular(20, 4, seed);
    EXPECT_TRUE(IsSimple01Symmetric(g.adjacency));
    for (int s : RowSums(g.adjacency)) EXPECT_EQ(s, 4);
  }
}

TEST(Bipartite, AllOnesHasZeroDeviation) {
  const BipartiteDeviation d = MeasureBipartiteDeviation(Matrix::Ones(5, 7), 1.0);
  EXPECT_NEAR(d.sigma, 0.0, 1e-12);
  EXPECT_FALSE(d.bracket.has_value());
}

TEST(Bipartite, CompleteBipartiteBlock) {
  // K_{m,n} as a bipartite adjacency block is J, so p = 1 gives zero.
  const BipartiteDeviation d = MeasureBipartiteDeviation(Matrix::Ones(3, 4), 1.0);
  EXPECT_NEAR(d.sigma, 0.0, 1e-12);
}

TEST(Bipartite, ShiftOnZ4) {
  const CayleyMatrix b = MakeBipartiteCayley(GroupFunction(Cyclic(4), std::vector<double>{0, 1, 0, 0}));
  const BipartiteDeviation d = MeasureBipartiteDeviation(b, 0.25);
  EXPECT_NEAR(d.sigma, 1.0, 1e-12);
  ASSERT_TRUE(d.bracket.has_value());
  EXPECT_NEAR(d.bracket->lower, 4.0, 1e-6);
  EXPECT_NEAR(d.bracket->upper, 4.0, 1e-12);
  ASSERT_TRUE(d.grothendieck_equality.has_value());
  EXPECT_TRUE(*d.grothendieck_equality);
}

TEST(Bipartite, RightTranslationInvariance) {
  const GroupPtr g = Dihedral(4);
  const std::vector<double> v = {0, 1, 1, 0, 1, 0, 0, 1};
  const CayleyMatrix b = MakeBipartiteCayley(GroupFunction(g, v));
  const double base = MeasureBipartiteDeviation(b.matrix, 0.5).sigma;
  for (int k = 0; k < 8; ++k) {
    // f_k(x) = f(x k): permutes the columns of B.
    std::vector<double> w(8);
    for (int x = 0; x < 8; ++x) w[x] = v[g->mul(x, k)];
    const CayleyMatrix bk = MakeBipartiteCayley(GroupFunction(g, w));
    EXPECT_NEAR(MeasureBipartiteDeviation(bk.matrix, 0.5).sigma, base, 1e-10);
  }
}

TEST(Bipartite, CayleyEqualityOnRandomSets) {
  CounterRng rng(21);
  for (const GroupPtr& g : {Cyclic(9), Dihedral(5), Product(*Cyclic(2), *Cyclic(4))}) {
    std::vector<double> v(g->order());
    for (double& x : v) x = rng.Below(2);
    const double p = std::accumulate(v.begin(), v.end(), 0.0) / g->order();
    const BipartiteDeviation d = MeasureBipartiteDeviation(MakeBipartiteCayley(GroupFunction(g, v)), p);
    ASSERT_TRUE(d.grothendieck_equality.has_value());
    EXPECT_TRUE(*d.grothendieck_equality) << g->label();
    EXPECT_LE(d.bracket->lower, d.bracket->upper * (1 + 1e-9));
  }
}

}  // namespace
}  // namespace quasi
