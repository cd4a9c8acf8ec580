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

#include "quasi/fourier.h"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "quasi/cayley.h"
#include "quasi/errors.h"
#include "quasi/io.h"
#include "quasi/norms.h"
#include "quasi/rng.h"

namespace quasi {
namespace {

const Complex kI(0.0, 1.0);

ComplexGroupFunction RandomComplex(GroupPtr g, CounterRng& rng) {
  std::vector<Complex> v(g->order());
  for (auto& z : v) {
    const double re = rng.Normal();
    z = Complex(re, rng.Normal());
  }
  return ComplexGroupFunction(std::move(g), std::move(v));
}

std::vector<GroupPtr> ShippedGroups() {
  return {Cyclic(1), Cyclic(5), Cyclic(12), Product(*Cyclic(2), *Cyclic(2)),
          Product(*Cyclic(3), *Cyclic(4)), Dihedral(1), Dihedral(2), Dihedral(3),
          Dihedral(4), Dihedral(5), Dihedral(6), Product(*Dihedral(3), *Cyclic(2))};
}

IrrepTable S3Table() {
  return ParseIrreps(ReadJsonFile(std::string(QUASI_DATA_DIR) + "/s3_irreps.json"), Symmetric(3));
}

TEST(BuildIrrepTable, CyclicFourCharacters) {
  const IrrepTable t = BuildIrrepTable(Cyclic(4));
  ASSERT_EQ(t.irreps.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    Complex expected = 1.0;
    for (int g = 0; g < 4; ++g) {
      EXPECT_NEAR(std::abs(t.irreps[k].matrices[g](0, 0) - expected), 0.0, 1e-15);
      expected *= std::pow(kI, k);
    }
  }
}

TEST(BuildIrrepTable, DihedralFour) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  int ones = 0, twos = 0;
  for (const Irrep& r : t.irreps) (r.dim == 1 ? ones : twos) += 1;
  EXPECT_EQ(ones, 4);
  EXPECT_EQ(twos, 1);
  EXPECT_EQ(t.MaxDimension(), 2);
}

TEST(BuildIrrepTable, KleinFourIsRealSigns) {
  const IrrepTable t = BuildIrrepTable(Product(*Cyclic(2), *Cyclic(2)));
  ASSERT_EQ(t.irreps.size(), 4u);
  for (const Irrep& r : t.irreps)
    for (const CMatrix& m : r.matrices) {
      EXPECT_NEAR(std::abs(m(0, 0).imag()), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(m(0, 0).real()), 1.0, 1e-15);
    }
}

TEST(BuildIrrepTable, ShippedTablesValidate) {
  for (const GroupPtr& g : ShippedGroups())
    EXPECT_TRUE(ValidateIrrepTable(BuildIrrepTable(g)).empty()) << g->label();
}

TEST(BuildIrrepTable, UnsupportedFamily) {
  EXPECT_THROW(BuildIrrepTable(Symmetric(3)), ValidationError);
}

TEST(ValidateIrrepTable, MissingIrrepIsIncomplete) {
  IrrepTable t = BuildIrrepTable(Dihedral(4));
  for (std::size_t i = 0; i < t.irreps.size(); ++i)
    if (t.irreps[i].dim == 2) {
      t.irreps.erase(t.irreps.begin() + i);
      break;
    }
  const auto d = ValidateIrrepTable(t);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, "incomplete");
}

TEST(ValidateIrrepTable, NonUnitaryNamesElement) {
  IrrepTable t = BuildIrrepTable(Cyclic(4));
  t.irreps[1].matrices[2](0, 0) = 2.0;
  const auto d = ValidateIrrepTable(t);
  bool found = false;
  for (const auto& x : d) found |= x.kind == "unitary" && x.message.find("element 2") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(ValidateIrrepTable, DirectSumIsReducible) {
  // Trivial plus sign character of Z_2 as one 2-dimensional "irrep".
  const GroupPtr g = Cyclic(2);
  IrrepTable t;
  t.group = g;
  Irrep r;
  r.dim = 2;
  r.matrices = {CMatrix::Identity(2), CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0})};
  t.irreps = {r};
  const auto d = ValidateIrrepTable(t);
  bool found = false;
  for (const auto& x : d) found |= x.kind == "irreducible" && x.message.find("= 2") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(ValidateIrrepTable, RepeatedIrrepIsEquivalent) {
  IrrepTable t = BuildIrrepTable(Cyclic(3));
  t.irreps[2] = t.irreps[1];
  bool found = false;
  for (const auto& x : ValidateIrrepTable(t)) found |= x.kind == "equivalent";
  EXPECT_TRUE(found);
}

TEST(ValidateIrrepTable, BrokenHomomorphism) {
  IrrepTable t = BuildIrrepTable(Cyclic(4));
  std::swap(t.irreps[1].matrices[1], t.irreps[1].matrices[3]);
  t.irreps[1].matrices[1] = CMatrix(1, 1, {Complex(0, 1)});
  t.irreps[1].matrices[3] = CMatrix(1, 1, {Complex(0, 1)});
  bool found = false;
  for (const auto& x : ValidateIrrepTable(t)) found |= x.kind == "homomorphism" || x.kind == "inverse";
  EXPECT_TRUE(found);
}

TEST(ValidateIrrepTable, SuppliedSymmetricThree) {
  const IrrepTable t = S3Table();
  EXPECT_TRUE(ValidateIrrepTable(t).empty());
  EXPECT_EQ(t.MaxDimension(), 2);
}

TEST(FourierTransform, ConstantOne) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  const auto c = FourierTransform(ComplexGroupFunction(t.group, Complex(1.0)), t);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const bool trivial = k == 0;
    for (int i = 0; i < c[k].rows(); ++i)
      for (int j = 0; j < c[k].cols(); ++j)
        EXPECT_NEAR(std::abs(c[k](i, j) - Complex(trivial ? 1.0 : 0.0)), 0.0, 1e-15);
  }
}

TEST(FourierTransform, ScaledPointMassGivesIdentity) {
  const IrrepTable t = BuildIrrepTable(Dihedral(5));
  ComplexGroupFunction delta(t.group, Complex(0.0));
  delta(0) = 10.0;
  const auto c = FourierTransform(delta, t);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (int i = 0; i < c[k].rows(); ++i)
      for (int j = 0; j < c[k].cols(); ++j)
        EXPECT_NEAR(std::abs(c[k](i, j) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-14);
}

TEST(FourierTransform, CycleIndicatorMatchesDirectSum) {
  const int n = 12;
  const IrrepTable t = BuildIrrepTable(Cyclic(n));
  ComplexGroupFunction f(t.group, Complex(0.0));
  f(1) = f(n - 1) = 1.0;
  const auto c = FourierTransform(f, t);
  for (int k = 0; k < n; ++k)
    EXPECT_NEAR(std::abs(c[k](0, 0) - Complex(2.0 * std::cos(2 * M_PI * k / n) / n)), 0.0, 1e-15);
}

TEST(FourierTransform, GroupMismatch) {
  const IrrepTable t = BuildIrrepTable(Cyclic(4));
  EXPECT_THROW(FourierTransform(ComplexGroupFunction(Dihedral(2), Complex(1.0)), t),
               ValidationError);
}

TEST(FourierInverse, ConstantOne) {
  const IrrepTable t = BuildIrrepTable(Dihedral(3));
  const auto back = FourierInverse(FourierTransform(ComplexGroupFunction(t.group, Complex(1.0)), t), t);
  for (int x = 0; x < 6; ++x) EXPECT_NEAR(std::abs(back(x) - 1.0), 0.0, 1e-15);
}

TEST(FourierInverse, MatrixUnitInTwoDimensionalIrrep) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  FourierCoefficients c;
  int two = -1;
  for (std::size_t k = 0; k < t.irreps.size(); ++k) {
    c.emplace_back(t.irreps[k].dim, t.irreps[k].dim);
    if (t.irreps[k].dim == 2) two = static_cast<int>(k);
  }
  c[two](0, 0) = 1.0;
  const ComplexGroupFunction f = FourierInverse(c, t);
  for (int x = 0; x < 8; ++x)
    EXPECT_NEAR(std::abs(f(x) - 2.0 * std::conj(t.irreps[two].matrices[x](0, 0))), 0.0, 1e-15);
}

TEST(FourierInverse, ShapeMismatch) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  EXPECT_THROW(FourierInverse(FourierCoefficients(2, CMatrix(1, 1)), t), ValidationError);
}

TEST(FourierProperties, PlancherelInversionConvolution) {
  CounterRng rng(12);
  std::vector<std::pair<GroupPtr, IrrepTable>> cases;
  for (const GroupPtr& g : ShippedGroups())
    if (g->order() <= 24) cases.emplace_back(g, BuildIrrepTable(g));
  cases.emplace_back(Symmetric(3), S3Table());
  for (const auto& [g, t] : cases) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexGroupFunction f = RandomComplex(g, rng), h = RandomComplex(g, rng);
      const auto cf = FourierTransform(f, t);
      const double l2 = std::pow(FunctionNorm(f, 2.0), 2);
      EXPECT_NEAR(PlancherelMass(cf, t), l2, 1e-10 * l2);
      const auto back = FourierInverse(cf, t);
      for (int x = 0; x < g->order(); ++x) EXPECT_NEAR(std::abs(back(x) - f(x)), 0.0, 1e-12);
      // Coefficients -> function -> coefficients.
      const auto again = FourierTransform(back, t);
      for (std::size_t k = 0; k < cf.size(); ++k)
        for (int i = 0; i < cf[k].rows(); ++i)
          for (int j = 0; j < cf[k].cols(); ++j) EXPECT_NEAR(std::abs(again[k](i, j) - cf[k](i, j)), 0.0, 1e-12);
      const auto cc = FourierTransform(Convolve(f, h), t);
      const auto ch = FourierTransform(h, t);
      for (std::size_t k = 0; k < cf.size(); ++k) {
        const CMatrix prod = cf[k] * ch[k];
        for (int i = 0; i < prod.rows(); ++i)
          for (int j = 0; j < prod.cols(); ++j) EXPECT_NEAR(std::abs(cc[k](i, j) - prod(i, j)), 0.0, 1e-10);
      }
    }
  }
}

TEST(SpectralViaIrreps, Examples) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  EXPECT_NEAR(SpectralViaIrreps(ComplexGroupFunction(t.group, Complex(1.0)), t), 1.0, 1e-15);
  const IrrepTable z2 = BuildIrrepTable(Cyclic(2));
  EXPECT_NEAR(SpectralViaIrreps(ComplexGroupFunction(z2.group, std::vector<Complex>{1.0, -1.0}), z2),
              1.0, 1e-15);
}

TEST(SpectralViaIrreps, MatchesDenseRoute) {
  CounterRng rng(13);
  for (const GroupPtr& g : ShippedGroups()) {
    const IrrepTable t = BuildIrrepTable(g);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexGroupFunction f = RandomComplex(g, rng);
      const double dense = GroupSpectral(f);
      EXPECT_NEAR(SpectralViaIrreps(f, t), dense, 1e-8 * dense);
    }
  }
  // Random symmetric real f on D_4.
  const GroupPtr d4 = Dihedral(4);
  const IrrepTable t = BuildIrrepTable(d4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(8);
    for (int x = 0; x < 8; ++x) v[x] = rng.Normal();
    for (int x = 0; x < 8; ++x) v[d4->inv(x)] = v[x];
    const GroupFunction f(d4, v);
    EXPECT_NEAR(SpectralViaIrreps(ToComplex(f), t), GroupSpectral(f), 1e-10);
  }
}

TEST(SchurAverage, Examples) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  int two = -1;
  for (std::size_t k = 0; k < t.irreps.size(); ++k)
    if (t.irreps[k].dim == 2) two = static_cast<int>(k);
  const CMatrix id = SchurAverage(t, two, two, CMatrix::Identity(2));
  const CMatrix e12 = SchurAverage(t, two, two, CMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(std::abs(id(i, j) - Complex(i == j)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(e12(i, j)), 0.0, 1e-15);
    }
  // Trivial versus sign-type characters.
  EXPECT_NEAR(std::abs(SchurAverage(t, 0, 1, CMatrix(1, 1, {Complex(3, -2)}))(0, 0)), 0.0, 1e-15);
  EXPECT_THROW(SchurAverage(t, two, 0, CMatrix(1, 1)), ValidationError);
}

TEST(SchurAverage, ClosedForm) {
  CounterRng rng(14);
  std::vector<IrrepTable> tables = {BuildIrrepTable(Dihedral(5)), BuildIrrepTable(Cyclic(6)), S3Table()};
  for (const IrrepTable& t : tables) {
    const int k = static_cast<int>(t.irreps.size());
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const int da = t.irreps[a].dim, db = t.irreps[b].dim;
        std::vector<Complex> v(da * db);
        for (auto& z : v) z = Complex(rng.Normal(), rng.Normal());
        const CMatrix m(da, db, v);
        const CMatrix avg = SchurAverage(t, a, b, m);
        Complex tr = 0.0;
        if (a == b)
          for (int i = 0; i < da; ++i) tr += m(i, i);
        for (int i = 0; i < da; ++i)
          for (int j = 0; j < db; ++j) {
            const Complex expected = (a == b && i == j) ? tr / double(da) : Complex(0.0);
            EXPECT_NEAR(std::abs(avg(i, j) - expected), 0.0, 1e-10);
          }
      }
  }
}

TEST(ComplexSvd, MatchesEigenOracle) {
  CounterRng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + rng.Below(4), n = m;
    std::vector<Complex> v(m * n);
    for (auto& z : v) z = Complex(rng.Normal(), rng.Normal());
    const CMatrix a(m, n, v);
    Eigen::MatrixXcd e(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) e(i, j) = a(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> oracle(e);
    const SvdResult s = ComplexSvd(a);
    const int r = std::min(m, n);
    for (int k = 0; k < r; ++k) {
      EXPECT_NEAR(s.values[k], oracle.singularValues()(k), 1e-10);
      // M v_k = s_k u_k.
      for (int i = 0; i < m; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j) acc += a(i, j) * s.right[k][j];
        EXPECT_NEAR(std::abs(acc - s.values[k] * s.left[k][i]), 0.0, 1e-9);
      }
    }
    EXPECT_NEAR(MatrixSpectralNorm(a), oracle.singularValues()(0), 1e-10);
  }
}

TEST(SvdWitness, Examples) {
  const IrrepTable t = BuildIrrepTable(Dihedral(3));
  const SvdWitness one = MakeSvdWitness(ComplexGroupFunction(t.group, Complex(1.0)), t);
  EXPECT_EQ(one.irrep, 0);
  EXPECT_NEAR(std::abs(one.objective - 1.0), 0.0, 1e-14);
  for (const auto& v : one.x) EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-15);
  const IrrepTable z2 = BuildIrrepTable(Cyclic(2));
  const SvdWitness sign = MakeSvdWitness(ComplexGroupFunction(z2.group, std::vector<Complex>{1.0, -1.0}), z2);
  EXPECT_EQ(sign.irrep, 1);
  EXPECT_NEAR(std::abs(sign.objective - 1.0), 0.0, 1e-14);
}

TEST(SvdWitness, AttainsNormOnRandomFunctions) {
  CounterRng rng(16);
  std::vector<IrrepTable> tables = {BuildIrrepTable(Dihedral(4)), BuildIrrepTable(Dihedral(5)),
                                    BuildIrrepTable(Cyclic(9)), S3Table()};
  for (const IrrepTable& t : tables) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexGroupFunction f = RandomComplex(t.group, rng);
      const SvdWitness w = MakeSvdWitness(f, t);
      const double dense = GroupSpectral(f);
      EXPECT_NEAR(std::abs(w.objective), dense, 1e-8 * dense);
      EXPECT_NEAR(w.objective.real(), w.norm, 1e-10 * dense);
      EXPECT_NEAR(w.norm, SpectralViaIrreps(f, t), 1e-12 * dense);
      for (const auto* side : {&w.x, &w.y})
        for (const auto& v : *side) {
          double s = 0.0;
          for (const Complex& z : v) s += std::norm(z);
          EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
  }
}

TEST(SvdWitness, RejectsInvalidTable) {
  IrrepTable t = BuildIrrepTable(Dihedral(4));
  t.irreps.pop_back();
  EXPECT_THROW(MakeSvdWitness(ComplexGroupFunction(t.group, Complex(1.0)), t), ValidationError);
}

TEST(AbelianCharacterNorm, Examples) {
  const GroupPtr z6 = Cyclic(6);
  const CharacterNorm c = AbelianCharacterNorm(ComplexGroupFunction(z6, Complex(2.0, -1.0)));
  EXPECT_NEAR(c.value, std::sqrt(5.0), 1e-14);
  EXPECT_EQ(c.character, 0);
  const IrrepTable t = BuildIrrepTable(Cyclic(12));
  ComplexGroupFunction ind(t.group, Complex(0.0));
  ind(1) = ind(11) = 1.0;
  EXPECT_NEAR(AbelianCharacterNorm(ind, t).value, 2.0 / 12, 1e-15);
  // A character itself.
  std::vector<Complex> chi(12);
  for (int x = 0; x < 12; ++x) chi[x] = t.irreps[5].matrices[x](0, 0);
  const CharacterNorm cn = AbelianCharacterNorm(ComplexGroupFunction(t.group, chi), t);
  EXPECT_NEAR(cn.value, 1.0, 1e-14);
  EXPECT_EQ(cn.character, 5);
  EXPECT_THROW(AbelianCharacterNorm(ComplexGroupFunction(Dihedral(3), Complex(1.0))), ValidationError);
}

TEST(AbelianCharacterNorm, EqualsDenseSpectral) {
  CounterRng rng(17);
  for (const GroupPtr& g : {Cyclic(7), Cyclic(24), Product(*Cyclic(2), *Cyclic(6))}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexGroupFunction f = RandomComplex(g, rng);
      const double dense = GroupSpectral(f);
      EXPECT_NEAR(AbelianCharacterNorm(f).value, dense, 1e-10 * std::max(1.0, dense));
    }
  }
}

// Real BM at rank 2 max d (the real form of C^{max d}) reaches |G| ||A(f)||.
TEST(RankBound, RealFormOfComplexRankSuffices) {
  for (const GroupPtr& g : ShippedGroups()) {
    const int k = 2 * BuildIrrepTable(g).MaxDimension();
    for (int trial = 0; trial < 5; ++trial) {
      CounterRng rng(trial, 0xB0);
      std::vector<double> v(g->order());
      for (double& x : v) x = rng.Normal();
      const Matrix a = MakeCayleyMatrix(GroupFunction(g, v)).matrix;
      BMConfig cfg;
      cfg.rank = k;
      cfg.seed = trial;
      cfg.max_sweeps = 5000;
      cfg.tolerance = 1e-14;
      const double target = g->order() * SpectralNorm(a);
      EXPECT_GE(GrothendieckBM(a, cfg).value, (1 - 1e-6) * target) << g->label() << " k=" << k;
    }
  }
}

// Dihedral irreps are realizable over the reals, so rank max d already suffices.
TEST(RankBound, DihedralRealIrrepsNeedOnlyMaxDimension) {
  for (const GroupPtr& g : {Dihedral(4), Dihedral(5), Dihedral(6)}) {
    for (int trial = 0; trial < 5; ++trial) {
      CounterRng rng(trial, 0xB1);
      std::vector<double> v(g->order());
      for (double& x : v) x = rng.Normal();
      const Matrix a = MakeCayleyMatrix(GroupFunction(g, v)).matrix;
      BMConfig cfg;
      cfg.rank = 2;
      cfg.seed = trial;
      EXPECT_GE(GrothendieckBM(a, cfg).value, (1 - 1e-6) * g->order() * SpectralNorm(a)) << g->label();
    }
  }
}

}  // namespace
}  // namespace quasi
