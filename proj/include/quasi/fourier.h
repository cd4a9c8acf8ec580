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

#ifndef QUASI_FOURIER_H_
#define QUASI_FOURIER_H_

#include <optional>
#include <string>
#include <vector>

#include "quasi/group.h"
#include "quasi/matrix.h"

namespace quasi {

// Unitary representation: one dim x dim matrix per group element.
struct Irrep {
  int dim = 1;
  std::vector<CMatrix> matrices;
};

struct IrrepTable {
  GroupPtr group;
  std::vector<Irrep> irreps;

  int MaxDimension() const;
};

// Irreps of the shipped families: cyclic, dihedral, and products of
// supported factors (tensor products of factor irreps). Other groups need
// a table from ParseIrreps. The result is validated; throws ValidationError
// otherwise.
IrrepTable BuildIrrepTable(GroupPtr group);

struct Diagnostic {
  std::string kind;  // "shape", "identity", "unitary", "homomorphism", ...
  std::string message;
};

// Checks every Irrep and IrrepTable invariant. Empty result means valid.
std::vector<Diagnostic> ValidateIrrepTable(const IrrepTable& table,
                                           double tol = 1e-10);

// Per-irrep Fourier coefficient f^(rho) = E_g f(g) rho(g).
using FourierCoefficients = std::vector<CMatrix>;

FourierCoefficients FourierTransform(const ComplexGroupFunction& f,
                                     const IrrepTable& table);

// f(g) = sum_rho d_rho Tr(f^(rho) rho(g)^*).
ComplexGroupFunction FourierInverse(const FourierCoefficients& coeffs,
                                    const IrrepTable& table);

// sum_rho d_rho ||f^(rho)||_HS^2
double PlancherelMass(const FourierCoefficients& coeffs, const IrrepTable& table);

// Operator norm of a small complex matrix.
double MatrixSpectralNorm(const CMatrix& m);

struct SvdResult {
  std::vector<double> values;  // descending
  std::vector<std::vector<Complex>> left;   // u_k, unit
  std::vector<std::vector<Complex>> right;  // v_k, unit; M v_k = s_k u_k
};

// SVD through the Hermitian embedding [[0, M], [M^*, 0]], diagonalized by
// real Jacobi on its real form. Square input only.
SvdResult ComplexSvd(const CMatrix& m);

// max_rho ||f^(rho)||.
double SpectralViaIrreps(const ComplexGroupFunction& f, const IrrepTable& table);

// E_g rho(g) M sigma(g^-1) for irreps with indices rho, sigma of `table`.
CMatrix SchurAverage(const IrrepTable& table, int rho, int sigma,
                     const CMatrix& m);

struct SvdWitness {
  int irrep = 0;  // sigma attaining the max top singular value
  double norm = 0.0;  // lambda_1^sigma
  std::vector<std::vector<Complex>> x;  // x(g) = sigma(g^-1) u_1
  std::vector<std::vector<Complex>> y;  // y(h) = sigma(h^-1) v_1
  Complex objective;  // E_{g,h} f(g h^-1) <x(g), y(h)>
};

// Throws ValidationError if the table is invalid.
SvdWitness MakeSvdWitness(const ComplexGroupFunction& f, const IrrepTable& table);

struct CharacterNorm {
  double value = 0.0;
  int character = 0;  // index into the table's irreps
};

// max_chi |E_g f(g) conj(chi(g))| over the characters of an abelian group.
// Throws ValidationError for non-abelian groups.
CharacterNorm AbelianCharacterNorm(const ComplexGroupFunction& f,
                                   const IrrepTable& table);
CharacterNorm AbelianCharacterNorm(const ComplexGroupFunction& f);

}  // namespace quasi

#endif  // QUASI_FOURIER_H_
