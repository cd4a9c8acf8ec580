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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quasi/linalg.h"
#include "quasi/rng.h"

namespace quasi {
namespace {

constexpr int kExhaustiveHomomorphismOrder = 256;
constexpr int kSampledHomomorphismPairs = 10'000;

Complex RootOfUnity(long long k, int n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % n) / n;
  return {std::cos(angle), std::sin(angle)};
}

CMatrix Scalar(Complex v) { return CMatrix(1, 1, v); }

CMatrix Kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

double MaxAbsDiff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Complex Trace(const CMatrix& a) {
  Complex t{};
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

std::vector<Irrep> FamilyIrreps(const GroupFamily& family);

std::vector<Irrep> CyclicIrreps(int n) {
  std::vector<Irrep> out;
  for (int k = 0; k < n; ++k) {
    Irrep chi;
    for (int g = 0; g < n; ++g) {
      chi.matrices.push_back(Scalar(RootOfUnity(static_cast<long long>(k) * g, n)));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

// Elements r^k s^e sit at index k + m e.
std::vector<Irrep> DihedralIrreps(int m) {
  const int n = 2 * m;
  std::vector<Irrep> out;
  auto one_dim = [&](auto value) {
    Irrep chi;
    for (int x = 0; x < n; ++x) chi.matrices.push_back(Scalar(value(x % m, x / m)));
    out.push_back(std::move(chi));
  };
  one_dim([](int, int) { return 1.0; });
  one_dim([](int, int e) { return e ? -1.0 : 1.0; });
  if (m % 2 == 0) {
    one_dim([](int k, int) { return k % 2 ? -1.0 : 1.0; });
    one_dim([](int k, int e) { return (k + e) % 2 ? -1.0 : 1.0; });
  }
  for (int j = 1; 2 * j < m; ++j) {
    Irrep rho;
    rho.dim = 2;
    for (int x = 0; x < n; ++x) {
      const int k = x % m, e = x / m;
      const Complex w = RootOfUnity(static_cast<long long>(j) * k, m);
      CMatrix mat(2, 2);
      if (e == 0) {
        mat(0, 0) = w;
        mat(1, 1) = std::conj(w);
      } else {
        mat(0, 1) = w;
        mat(1, 0) = std::conj(w);
      }
      rho.matrices.push_back(std::move(mat));
    }
    out.push_back(std::move(rho));
  }
  return out;
}

std::vector<Irrep> ProductIrreps(const GroupFamily& a, const GroupFamily& b) {
  const std::vector<Irrep> left = FamilyIrreps(a);
  const std::vector<Irrep> right = FamilyIrreps(b);
  const int nb = static_cast<int>(right.front().matrices.size());
  const int n = static_cast<int>(left.front().matrices.size()) * nb;
  std::vector<Irrep> out;
  for (const Irrep& p : left) {
    for (const Irrep& q : right) {
      Irrep rho;
      rho.dim = p.dim * q.dim;
      for (int x = 0; x < n; ++x) {
        rho.matrices.push_back(Kron(p.matrices[x / nb], q.matrices[x % nb]));
      }
      out.push_back(std::move(rho));
    }
  }
  return out;
}

std::vector<Irrep> FamilyIrreps(const GroupFamily& family) {
  switch (family.kind) {
    case GroupFamily::Kind::kCyclic:
      return CyclicIrreps(family.param);
    case GroupFamily::Kind::kDihedral:
      return DihedralIrreps(family.param);
    case GroupFamily::Kind::kProduct:
      return ProductIrreps(family.factors.at(0), family.factors.at(1));
    default:
      throw ValidationError(
          "no shipped irreducible representations for this group family "
          "(cyclic, dihedral and their products are built in); supply a "
          "table through ParseIrreps");
  }
}

}  // namespace

int IrrepTable::MaxDimension() const {
  int d = 0;
  for (const Irrep& r : irreps) d = std::max(d, r.dim);
  return d;
}

IrrepTable BuildIrrepTable(GroupPtr group) {
  IrrepTable table{group, FamilyIrreps(group->family())};
  const std::vector<Diagnostic> diags = ValidateIrrepTable(table);
  if (!diags.empty()) {
    throw ValidationError("built-in irreps failed validation: " + diags.front().message);
  }
  return table;
}

std::vector<Diagnostic> ValidateIrrepTable(const IrrepTable& table, double tol) {
  std::vector<Diagnostic> out;
  if (!table.group) {
    out.push_back({"shape", "irrep table has no group"});
    return out;
  }
  const GroupTable& g = *table.group;
  const int n = g.order();
  auto fail = [&](std::string kind, int rho, std::string what) {
    out.push_back({std::move(kind), "irrep " + std::to_string(rho) + ": " + what});
  };
  std::vector<char> usable(table.irreps.size(), 0);
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    const Irrep& rho = table.irreps[r];
    const int ri = static_cast<int>(r);
    if (rho.dim < 1 || static_cast<int>(rho.matrices.size()) != n) {
      fail("shape", ri, "expected " + std::to_string(n) + " matrices of positive dimension");
      continue;
    }
    bool shaped = true;
    for (int x = 0; x < n && shaped; ++x) {
      shaped = rho.matrices[x].rows() == rho.dim && rho.matrices[x].cols() == rho.dim;
      if (!shaped) fail("shape", ri, "matrix at element " + std::to_string(x) + " is not d x d");
    }
    if (!shaped) continue;
    usable[r] = 1;
    const CMatrix id = CMatrix::Identity(rho.dim);
    if (MaxAbsDiff(rho.matrices[0], id) > tol) fail("identity", ri, "rho(e) != I");
    for (int x = 0; x < n; ++x) {
      const CMatrix& m = rho.matrices[x];
      if (MaxAbsDiff(m * m.Adjoint(), id) > tol) {
        fail("unitary", ri, "not unitary at element " + std::to_string(x));
      }
      if (MaxAbsDiff(rho.matrices[g.inv(x)], m.Adjoint()) > tol) {
        fail("inverse", ri, "rho(g^-1) != rho(g)^* at element " + std::to_string(x));
      }
    }
    auto check_pair = [&](int a, int b) {
      if (MaxAbsDiff(rho.matrices[g.mul(a, b)], rho.matrices[a] * rho.matrices[b]) > tol) {
        fail("homomorphism", ri,
             "rho(gh) != rho(g) rho(h) at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ")");
        return false;
      }
      return true;
    };
    if (n <= kExhaustiveHomomorphismOrder) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) ok = check_pair(a, b);
    } else {
      CounterRng rng(0, static_cast<std::uint64_t>(n));
      for (int i = 0; i < kSampledHomomorphismPairs; ++i) {
        if (!check_pair(static_cast<int>(rng.Below(n)), static_cast<int>(rng.Below(n)))) break;
      }
    }
    double character_mass = 0.0;
    for (int x = 0; x < n; ++x) character_mass += std::norm(Trace(rho.matrices[x]));
    character_mass /= n;
    if (std::abs(character_mass - 1.0) > tol) {
      fail("irreducible", ri,
           "E_g |Tr rho(g)|^2 = " + std::to_string(character_mass) + " != 1");
    }
  }
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    for (std::size_t s = r + 1; s < table.irreps.size(); ++s) {
      if (!usable[r] || !usable[s]) continue;
      Complex inner{};
      for (int x = 0; x < n; ++x) {
        inner += Trace(table.irreps[r].matrices[x]) *
                 std::conj(Trace(table.irreps[s].matrices[x]));
      }
      inner /= static_cast<double>(n);
      if (std::abs(inner) > tol) {
        out.push_back({"equivalent", "irreps " + std::to_string(r) + " and " +
                                         std::to_string(s) +
                                         " have non-orthogonal characters"});
      }
    }
  }
  long long dim_mass = 0;
  for (const Irrep& r : table.irreps) dim_mass += static_cast<long long>(r.dim) * r.dim;
  if (dim_mass != n) {
    out.push_back({"incomplete", "sum of squared dimensions is " +
                                     std::to_string(dim_mass) + ", group order is " +
                                     std::to_string(n)});
  }
  return out;
}

FourierCoefficients FourierTransform(const ComplexGroupFunction& f,
                                     const IrrepTable& table) {
  if (!SameGroup(f.group(), *table.group)) {
    throw ValidationError("Fourier transform: function and table use different groups");
  }
  const int n = f.group().order();
  FourierCoefficients out;
  for (const Irrep& rho : table.irreps) {
    CMatrix acc(rho.dim, rho.dim);
    for (int x = 0; x < n; ++x) {
      const Complex fx = f(x);
      if (fx == Complex{}) continue;
      const CMatrix& m = rho.matrices[x];
      for (int i = 0; i < rho.dim; ++i)
        for (int j = 0; j < rho.dim; ++j) acc(i, j) += fx * m(i, j);
    }
    out.push_back((Complex(1.0 / n)) * acc);
  }
  return out;
}

ComplexGroupFunction FourierInverse(const FourierCoefficients& coeffs,
                                    const IrrepTable& table) {
  if (coeffs.size() != table.irreps.size()) {
    throw ValidationError("Fourier inverse: coefficient count does not match the table");
  }
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const int d = table.irreps[r].dim;
    if (coeffs[r].rows() != d || coeffs[r].cols() != d) {
      throw ValidationError("Fourier inverse: coefficient " + std::to_string(r) +
                            " is not " + std::to_string(d) + "x" + std::to_string(d));
    }
  }
  const int n = table.group->order();
  std::vector<Complex> values(n);
  for (int x = 0; x < n; ++x) {
    Complex acc{};
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      const Irrep& rho = table.irreps[r];
      const CMatrix& m = rho.matrices[x];
      Complex hs{};
      for (int i = 0; i < rho.dim; ++i)
        for (int j = 0; j < rho.dim; ++j) hs += coeffs[r](i, j) * std::conj(m(i, j));
      acc += static_cast<double>(rho.dim) * hs;
    }
    values[x] = acc;
  }
  return ComplexGroupFunction(table.group, std::move(values));
}

double PlancherelMass(const FourierCoefficients& coeffs, const IrrepTable& table) {
  double acc = 0.0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    double hs = 0.0;
    for (const Complex& v : coeffs[r].data()) hs += std::norm(v);
    acc += table.irreps[r].dim * hs;
  }
  return acc;
}

SvdResult ComplexSvd(const CMatrix& m) {
  if (!m.square()) throw ValidationError("ComplexSvd expects a square matrix");
  const int d = m.rows();
  // H = [[0, M], [M^*, 0]] is Hermitian with eigenvalues +-s_k.
  CMatrix h(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      h(i, d + j) = m(i, j);
      h(d + j, i) = std::conj(m(i, j));
    }
  }
  const EigenDecomposition eig = JacobiEigen(Realify(h));
  // A real eigenvector [p; q] of the real form is the complex eigenvector
  // p + i q of H. Each eigenvalue shows up twice (w and i w).
  std::vector<int> order(eig.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eig.values[a] > eig.values[b]; });
  const int dim = 2 * d;
  SvdResult out;
  std::vector<std::vector<Complex>> basis;  // accepted eigenvectors of H
  auto dot = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
  };
  const double scale = std::max(1.0, MaxAbsEntry(Realify(m)));
  for (int idx : order) {
    if (static_cast<int>(out.values.size()) == d) break;
    const double sigma = eig.values[idx];
    if (sigma <= 1e-13 * scale) break;
    std::vector<Complex> w(dim);
    for (int i = 0; i < dim; ++i) w[i] = {eig.vectors[idx][i], eig.vectors[idx][dim + i]};
    for (const auto& b : basis) {
      const Complex c = dot(b, w);
      for (int i = 0; i < dim; ++i) w[i] -= c * b[i];
    }
    double norm = std::sqrt(std::real(dot(w, w)));
    if (norm < 0.5) continue;  // the i*w partner of an accepted vector
    for (auto& v : w) v /= norm;
    basis.push_back(w);
    std::vector<Complex> u(w.begin(), w.begin() + d), v(w.begin() + d, w.end());
    const double nu = std::sqrt(std::real(dot(u, u)));
    const double nv = std::sqrt(std::real(dot(v, v)));
    for (auto& x : u) x /= nu;
    for (auto& x : v) x /= nv;
    out.values.push_back(sigma);
    out.left.push_back(std::move(u));
    out.right.push_back(std::move(v));
  }
  // Zero singular values: complete both bases by Gram-Schmidt.
  auto complete = [&](std::vector<std::vector<Complex>>& vecs) {
    for (int e = 0; e < d && static_cast<int>(vecs.size()) < d; ++e) {
      std::vector<Complex> w(d);
      w[e] = 1.0;
      for (const auto& b : vecs) {
        const Complex c = dot(b, w);
        for (int i = 0; i < d; ++i) w[i] -= c * b[i];
      }
      const double norm = std::sqrt(std::real(dot(w, w)));
      if (norm < 1e-6) continue;
      for (auto& x : w) x /= norm;
      vecs.push_back(std::move(w));
    }
  };
  complete(out.left);
  complete(out.right);
  out.values.resize(d, 0.0);
  return out;
}

double MatrixSpectralNorm(const CMatrix& m) {
  return TopSingularTriplet(Realify(m)).value;
}

double SpectralViaIrreps(const ComplexGroupFunction& f, const IrrepTable& table) {
  double best = 0.0;
  for (const CMatrix& c : FourierTransform(f, table)) {
    best = std::max(best, ComplexSvd(c).values.front());
  }
  return best;
}

CMatrix SchurAverage(const IrrepTable& table, int rho, int sigma, const CMatrix& m) {
  const int count = static_cast<int>(table.irreps.size());
  if (rho < 0 || rho >= count || sigma < 0 || sigma >= count) {
    throw ValidationError("Schur average: irrep index out of range");
  }
  const Irrep& a = table.irreps[rho];
  const Irrep& b = table.irreps[sigma];
  if (m.rows() != a.dim || m.cols() != b.dim) {
    throw ValidationError("Schur average: M must be d_rho x d_sigma");
  }
  const GroupTable& g = *table.group;
  CMatrix acc(a.dim, b.dim);
  for (int x = 0; x < g.order(); ++x) {
    acc = acc + a.matrices[x] * m * b.matrices[g.inv(x)];
  }
  return Complex(1.0 / g.order()) * acc;
}

SvdWitness MakeSvdWitness(const ComplexGroupFunction& f, const IrrepTable& table) {
  const std::vector<Diagnostic> diags = ValidateIrrepTable(table);
  if (!diags.empty()) {
    throw ValidationError("SVD witness: invalid irrep table: " + diags.front().message);
  }
  const FourierCoefficients coeffs = FourierTransform(f, table);
  SvdWitness w;
  SvdResult best_svd;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    SvdResult svd = ComplexSvd(coeffs[r]);
    if (r == 0 || svd.values.front() > w.norm) {
      w.norm = svd.values.front();
      w.irrep = static_cast<int>(r);
      best_svd = std::move(svd);
    }
  }
  const Irrep& sigma = table.irreps[w.irrep];
  const GroupTable& g = *table.group;
  const int n = g.order();
  const int d = sigma.dim;
  // x(g) = sigma(g)^* u_1 and y(h) = sigma(h)^* v_1, so that
  // <x(g), y(h)> = u_1^* sigma(g h^-1) v_1 and the objective collapses to
  // u_1^* f^(sigma) v_1 = lambda_1.
  auto transport = [&](const std::vector<Complex>& vec) {
    std::vector<std::vector<Complex>> out(n, std::vector<Complex>(d));
    for (int x = 0; x < n; ++x) {
      const CMatrix& m = sigma.matrices[g.inv(x)];
      for (int i = 0; i < d; ++i) {
        Complex acc{};
        for (int j = 0; j < d; ++j) acc += m(i, j) * vec[j];
        out[x][i] = acc;
      }
    }
    return out;
  };
  w.x = transport(best_svd.left.front());
  w.y = transport(best_svd.right.front());
  Complex acc{};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Complex inner{};
      for (int i = 0; i < d; ++i) inner += std::conj(w.x[a][i]) * w.y[b][i];
      acc += f(g.mul(a, g.inv(b))) * inner;
    }
  }
  w.objective = acc / (static_cast<double>(n) * n);
  return w;
}

CharacterNorm AbelianCharacterNorm(const ComplexGroupFunction& f,
                                   const IrrepTable& table) {
  if (!f.group().IsAbelian()) {
    throw ValidationError("character norm requires an abelian group");
  }
  if (!SameGroup(f.group(), *table.group)) {
    throw ValidationError("character norm: function and table use different groups");
  }
  const int n = f.group().order();
  CharacterNorm best;
  bool have = false;
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    const Irrep& chi = table.irreps[r];
    if (chi.dim != 1) throw ValidationError("character norm: irrep is not one-dimensional");
    Complex acc{};
    for (int x = 0; x < n; ++x) acc += f(x) * std::conj(chi.matrices[x](0, 0));
    const double value = std::abs(acc) / n;
    if (!have || value > best.value) {
      best.value = value;
      best.character = static_cast<int>(r);
      have = true;
    }
  }
  return best;
}

CharacterNorm AbelianCharacterNorm(const ComplexGroupFunction& f) {
  if (!f.group().IsAbelian()) {
    throw ValidationError("character norm requires an abelian group");
  }
  return AbelianCharacterNorm(f, BuildIrrepTable(f.group_ptr()));
}

}  // namespace quasi
