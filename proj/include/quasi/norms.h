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

#ifndef QUASI_NORMS_H_
#define QUASI_NORMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasi/cayley.h"
#include "quasi/group.h"
#include "quasi/matrix.h"

namespace quasi {

// Upper bound on the real Grothendieck constant (1.78...).
inline constexpr double kGrothendieckConstant = 1.783;
// 4 K_G <= 8: the cut/Grothendieck equivalence constant.
inline constexpr double kCutGrothendieckFactor = 8.0;
// Row-count cap for the exhaustive cut and infinity-to-one norms.
inline constexpr int kDefaultExactLimit = 26;
// Hard ceiling even when the caller overrides the cap.
inline constexpr int kMaxExactLimit = 40;

// Largest singular value.
double SpectralNorm(const Matrix& a);

struct Spectrum {
  // Sorted by |value| descending; ties put the larger value first.
  std::vector<double> eigenvalues;
  // Second largest absolute value (0 for 1x1 input).
  double lambda2 = 0.0;
};

// Full spectrum of a symmetric matrix by cyclic Jacobi.
Spectrum SymmetricSpectrum(const Matrix& a);

struct CutResult {
  double value = 0.0;
  std::vector<int> rows;  // S, ascending
  std::vector<int> cols;  // T, ascending
};

// max_{S,T} |sum_{s in S, t in T} a_st| by enumerating S. For fixed S the
// best T is the positive (or negative) support of the column sums. Ties go
// to the lexicographically smallest S, then T. Throws CapacityError when
// rows > exact_limit.
CutResult CutNormExact(const Matrix& a, int exact_limit = kDefaultExactLimit);

struct InftyOneResult {
  double value = 0.0;
  std::vector<int> x;  // +-1 per row, x[0] = +1
  std::vector<int> y;  // +-1 per column
};

// max over x in {-1,1}^m of sum_t |sum_s a_st x_s|.
InftyOneResult InftyOneExact(const Matrix& a,
                             int exact_limit = kDefaultExactLimit);

struct BMConfig {
  int rank = 0;  // 0 selects DefaultBMRank
  int restarts = 8;
  int max_sweeps = 500;
  double tolerance = 1e-10;  // relative objective gain per sweep
  std::uint64_t seed = 0;
};

// min(m + n, ceil(sqrt(2 (m + n))) + 2)
int DefaultBMRank(int rows, int cols);

// Unit-ball vectors for the Grothendieck program.
struct VectorAssignment {
  std::vector<std::vector<double>> left;   // x_1..x_m
  std::vector<std::vector<double>> right;  // y_1..y_n
  double objective = 0.0;
};

// |sum_{s,t} a_st <x_s, y_t>|.
double BilinearObjective(const Matrix& a, const VectorAssignment& v);

struct BMResult {
  double value = 0.0;  // feasible, so a lower bound on ||A||_G
  VectorAssignment witness;
  int rank = 0;
  int best_restart = 0;
  int sweeps = 0;                // sweeps run by the best restart
  std::vector<double> trace;     // objective after each sweep, best restart
};

// Low-rank block ascent on the Grothendieck program.
BMResult GrothendieckBM(const Matrix& a, const BMConfig& cfg = {});

struct GrothendieckBracket {
  double lower = 0.0;
  double upper = 0.0;
  double bm_value = 0.0;
  int rank = 0;
  double spectral = 0.0;
  std::optional<double> infty_one;
  std::optional<double> cut;
};

// lower = max(BM, infty->1); upper = min(sqrt(mn)||A||, K_G infty->1,
// 8 cut). The exact norms participate only when rows <= exact_limit.
GrothendieckBracket GrothendieckBounds(const Matrix& a, const BMConfig& cfg = {},
                                       int exact_limit = kDefaultExactLimit);

// ||f|| = |G|^-1 ||A(f)||.
double GroupSpectral(const GroupFunction& f);
double GroupSpectral(const ComplexGroupFunction& f);

struct TranslateWitness {
  // Row g of `left` is x_g = x(g .) written in an orthonormal basis of
  // L^2(G), i.e. x(g h) / sqrt(|G|) for h in G; likewise `right`.
  VectorAssignment vectors;
  // E_{g,h} f(g h^-1) <x_g, y_h>, also stored in vectors.objective.
  double objective = 0.0;
};

// Throws ValidationError if ||x||_2 or ||y||_2 exceeds 1 by more than 1e-9.
TranslateWitness MakeTranslateWitness(const GroupFunction& f,
                                      const GroupFunction& x,
                                      const GroupFunction& y);

// One inequality lhs <= rhs with its slack.
struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool passed = false;
};

Check MakeCheck(std::string name, double lhs, double rhs,
                double rel_tol = 1e-9);

struct NormReport {
  int rows = 0;
  int cols = 0;
  double spectral = 0.0;
  std::optional<CutResult> cut;
  std::optional<InftyOneResult> infty_one;
  double bm_value = 0.0;
  double groth_lower = 0.0;
  double groth_upper = 0.0;
  int bm_rank = 0;
  int bm_restarts = 0;
  VectorAssignment bm_witness;
  // Absent when the matrix is not square or too large to search.
  std::optional<bool> transitive;
  std::vector<Permutation> automorphisms;  // one per vertex when transitive
  std::optional<std::size_t> automorphism_subgroup_order;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  struct Timing {
    std::string stage;
    double seconds = 0.0;
  };
  std::vector<Timing> timings;  // filled only on request
};

// Every inequality that applies to the report: the cut / infty->1 sandwich,
// the Grothendieck and Cauchy-Schwarz bounds on the BM value, and for
// transitive inputs cut <= n||A|| <= 8 cut plus the BM equality at n||A||
// (relative tolerance 1e-6). Failures are reported, never thrown.
std::vector<Check> VerifySandwich(const NormReport& report);

struct AnalyzeOptions {
  BMConfig bm;
  int exact_limit = kDefaultExactLimit;
  bool detect_transitivity = true;
  bool record_timings = false;
};

NormReport AnalyzeMatrix(const Matrix& a, const AnalyzeOptions& opts = {});

// Uniformity of a d-regular matrix: eps = ||A - (d/n) J||_cut / (d n).
struct Uniformity {
  bool exact = false;
  double low = 0.0;   // equals high in exact mode
  double high = 0.0;
  std::optional<CutResult> cut;  // centered cut witness, exact mode only
};

// Throws ValidationError on non-regular input. Above exact_limit returns
// [G_lower / 8, G_upper] / (d n) from GrothendieckBounds.
Uniformity EpsilonUniformity(const Matrix& a, double d,
                             int exact_limit = kDefaultExactLimit,
                             const BMConfig& cfg = {});

struct MixingResult {
  bool holds = true;
  bool exhaustive = false;
  long long pairs_checked = 0;
  // min over examined pairs of lambda sqrt(|S||T|) - |e(S,T) - d|S||T|/n|
  double worst_margin = 0.0;
  std::uint64_t worst_s = 0;
  std::uint64_t worst_t = 0;
};

inline constexpr int kMaxExhaustiveMixingOrder = 14;
inline constexpr long long kMixingSamplePairs = 100'000;

// |e(S,T) - (d/n)|S||T|| <= lambda sqrt(|S||T|), with e(S,T) counting
// ordered pairs. Exhaustive for n <= 14, else a seeded sample of 10^5 pairs
// (vertex sets then reported as masks only for n <= 64).
MixingResult MixingLemmaCheck(const Matrix& a, double d, double lambda,
                              std::uint64_t seed = 0);

struct EigenvalueBoundResult {
  double lambda = 0.0;
  double epsilon = 0.0;
  double degree = 0.0;
  bool holds = false;
  double ratio = 0.0;  // lambda / (eps d); infinity when eps d == 0
};

// lambda <= 8 eps d with exact eps. Throws CapacityError above exact_limit.
EigenvalueBoundResult EigenvalueBoundCheck(const Matrix& a, double d,
                             int exact_limit = kDefaultExactLimit);

}  // namespace quasi

#endif  // QUASI_NORMS_H_
