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

#include "quasi/norms.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "quasi/linalg.h"
#include "quasi/rng.h"

namespace quasi {
namespace {

void CheckExactLimit(const Matrix& a, int exact_limit, const char* what) {
  const int limit = std::min(exact_limit, kMaxExactLimit);
  if (a.rows() > limit) {
    throw CapacityError(std::string(what) + ": " + std::to_string(a.rows()) +
                        " rows exceed the exhaustive limit " +
                        std::to_string(limit) +
                        "; use GrothendieckBounds for a certified bracket");
  }
}

std::vector<int> MaskToList(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Lexicographic order of the sorted element lists of two sets.
bool MaskLexLess(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int j = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << j) - 1);
  if (a >> j & 1) return (b & above) != 0;  // j in a: a < b iff b continues
  return (a & above) == 0;                  // j in b: a < b iff a stops
}

// Row-subset sums split into two halves: sums(lo, hi) = low[lo] + high[hi].
// Each half table is filled from its own zero mask, so the value for a given
// subset does not depend on visiting order.
struct SplitSums {
  int low_bits = 0;
  int high_bits = 0;
  int cols = 0;
  std::vector<double> low;
  std::vector<double> high;
};

SplitSums BuildSplitSums(const Matrix& a, int low_bits,
                         const std::vector<double>& sign_base, double step) {
  // Entries: base_row_combination + step * row for each set bit.
  SplitSums s;
  s.low_bits = low_bits;
  s.high_bits = a.rows() - low_bits;
  s.cols = a.cols();
  const int n = a.cols();
  auto fill = [&](std::vector<double>& table, int first_row, int bits,
                  bool with_base) {
    const std::size_t count = std::size_t{1} << bits;
    table.assign(count * n, 0.0);
    if (with_base) std::copy(sign_base.begin(), sign_base.end(), table.begin());
    for (std::size_t mask = 1; mask < count; ++mask) {
      const std::size_t prev = mask & (mask - 1);
      const int row = first_row + std::countr_zero(mask);
      const auto r = a.row(row);
      for (int t = 0; t < n; ++t) {
        table[mask * n + t] = table[prev * n + t] + step * r[t];
      }
    }
  };
  fill(s.low, 0, s.low_bits, true);
  fill(s.high, low_bits, s.high_bits, false);
  return s;
}

}  // namespace

double SpectralNorm(const Matrix& a) { return TopSingularTriplet(a).value; }

Spectrum SymmetricSpectrum(const Matrix& a) {
  if (!a.square()) throw ValidationError("symmetric spectrum needs a square matrix");
  const double scale = std::max(1.0, MaxAbsEntry(a));
  if (!IsSymmetric(a, 1e-12 * scale)) {
    throw ValidationError("symmetric spectrum: matrix is not symmetric");
  }
  EigenDecomposition eig = JacobiEigen(a);
  Spectrum s;
  s.eigenvalues = std::move(eig.values);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](double x, double y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return x > y;
  });
  if (s.eigenvalues.size() > 1) s.lambda2 = std::abs(s.eigenvalues[1]);
  return s;
}

CutResult CutNormExact(const Matrix& a, int exact_limit) {
  CheckExactLimit(a, exact_limit, "cut norm");
  const int m = a.rows();
  const int n = a.cols();
  CutResult best;
  if (m == 0 || n == 0 || MaxAbsEntry(a) == 0.0) return best;

  const int low_bits = m / 2;
  const SplitSums sums =
      BuildSplitSums(a, low_bits, std::vector<double>(n, 0.0), 1.0);
  const std::size_t low_count = std::size_t{1} << sums.low_bits;
  const std::size_t high_count = std::size_t{1} << sums.high_bits;

  std::uint64_t best_s = 0;
  std::vector<int> best_t;
  std::vector<int> pos, neg;
  std::vector<double> c(n);
  for (std::size_t hi = 0; hi < high_count; ++hi) {
    const double* h = &sums.high[hi * n];
    for (std::size_t lo = 0; lo < low_count; ++lo) {
      const double* l = &sums.low[lo * n];
      double p = 0.0, q = 0.0;
      for (int t = 0; t < n; ++t) {
        c[t] = l[t] + h[t];
        if (c[t] > 0) p += c[t]; else q -= c[t];
      }
      const double value = std::max(p, q);
      if (value < best.value) continue;
      const std::uint64_t s_mask = lo | (hi << sums.low_bits);
      if (value == best.value && !MaskLexLess(s_mask, best_s)) continue;
      // New best (or a tie with a smaller S). T is the winning support.
      pos.clear();
      neg.clear();
      for (int t = 0; t < n; ++t) {
        if (c[t] > 0) pos.push_back(t);
        if (c[t] < 0) neg.push_back(t);
      }
      std::vector<int>* t_set = p > q ? &pos : (q > p ? &neg : nullptr);
      if (t_set == nullptr) t_set = std::lexicographical_compare(
          pos.begin(), pos.end(), neg.begin(), neg.end()) ? &pos : &neg;
      best.value = value;
      best_s = s_mask;
      best_t = *t_set;
    }
  }
  best.rows = MaskToList(best_s);
  best.cols = std::move(best_t);
  return best;
}

InftyOneResult InftyOneExact(const Matrix& a, int exact_limit) {
  CheckExactLimit(a, exact_limit, "infinity-to-one norm");
  const int m = a.rows();
  const int n = a.cols();
  InftyOneResult best;
  best.x.assign(m, 1);
  best.y.assign(n, 1);
  if (m == 0 || n == 0 || MaxAbsEntry(a) == 0.0) return best;

  // Bit i set means x_i = -1. Row 0 stays +1 (x and -x give equal values).
  const int low_bits = (m + 1) / 2;
  std::vector<double> all_plus(n, 0.0);
  for (int s = 0; s < low_bits; ++s)
    for (int t = 0; t < n; ++t) all_plus[t] += a(s, t);
  SplitSums sums = BuildSplitSums(a, low_bits, all_plus, -2.0);
  // High half: start from the all-plus sum of its rows.
  {
    std::vector<double> high_plus(n, 0.0);
    for (int s = low_bits; s < m; ++s)
      for (int t = 0; t < n; ++t) high_plus[t] += a(s, t);
    const std::size_t count = std::size_t{1} << sums.high_bits;
    sums.high.assign(count * n, 0.0);
    std::copy(high_plus.begin(), high_plus.end(), sums.high.begin());
    for (std::size_t mask = 1; mask < count; ++mask) {
      const std::size_t prev = mask & (mask - 1);
      const auto r = a.row(low_bits + std::countr_zero(mask));
      for (int t = 0; t < n; ++t)
        sums.high[mask * n + t] = sums.high[prev * n + t] - 2.0 * r[t];
    }
  }
  const std::size_t low_count = std::size_t{1} << sums.low_bits;
  const std::size_t high_count = std::size_t{1} << sums.high_bits;
  double best_value = -1.0;
  std::uint64_t best_mask = 0;
  for (std::size_t hi = 0; hi < high_count; ++hi) {
    const double* h = &sums.high[hi * n];
    for (std::size_t lo = 0; lo < low_count; lo += 2) {
      const double* l = &sums.low[lo * n];
      double value = 0.0;
      for (int t = 0; t < n; ++t) value += std::abs(l[t] + h[t]);
      if (value > best_value) {
        best_value = value;
        best_mask = lo | (hi << sums.low_bits);
      }
    }
  }
  best.value = best_value;
  for (int s = 0; s < m; ++s) best.x[s] = (best_mask >> s & 1) ? -1 : 1;
  for (int t = 0; t < n; ++t) {
    double c = 0.0;
    for (int s = 0; s < m; ++s) c += best.x[s] * a(s, t);
    best.y[t] = c < 0 ? -1 : 1;
  }
  return best;
}

int DefaultBMRank(int rows, int cols) {
  const int total = rows + cols;
  const int heuristic =
      static_cast<int>(std::ceil(std::sqrt(2.0 * total))) + 2;
  return std::max(1, std::min(total, heuristic));
}

double BilinearObjective(const Matrix& a, const VectorAssignment& v) {
  double acc = 0.0;
  for (int s = 0; s < a.rows(); ++s) {
    for (int t = 0; t < a.cols(); ++t) {
      const double ast = a(s, t);
      if (ast == 0.0) continue;
      acc += ast * std::inner_product(v.left[s].begin(), v.left[s].end(),
                                      v.right[t].begin(), 0.0);
    }
  }
  return std::abs(acc);
}

namespace {

// One restart of block ascent. Vectors are stored row-major (count x k).
struct AscentState {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> trace;
  double value = 0.0;
};

void UpdateBlock(const Matrix& a, bool update_rows, int k,
                 const std::vector<double>& other, std::vector<double>& self,
                 double* objective) {
  const int count = update_rows ? a.rows() : a.cols();
  const int other_count = update_rows ? a.cols() : a.rows();
  std::vector<double> g(k);
  double obj = 0.0;
  for (int i = 0; i < count; ++i) {
    std::fill(g.begin(), g.end(), 0.0);
    for (int j = 0; j < other_count; ++j) {
      const double w = update_rows ? a(i, j) : a(j, i);
      if (w == 0.0) continue;
      const double* o = &other[static_cast<std::size_t>(j) * k];
      for (int r = 0; r < k; ++r) g[r] += w * o[r];
    }
    double norm = 0.0;
    for (double v : g) norm += v * v;
    norm = std::sqrt(norm);
    double* dst = &self[static_cast<std::size_t>(i) * k];
    if (norm > 0.0) {
      for (int r = 0; r < k; ++r) dst[r] = g[r] / norm;
    }
    // Zero gradient: keep the previous vector; it contributes 0 either way.
    obj += norm;
  }
  *objective = obj;
}

AscentState RunAscent(const Matrix& a, int k, const BMConfig& cfg, int restart) {
  const int m = a.rows();
  const int n = a.cols();
  CounterRng rng(cfg.seed, static_cast<std::uint64_t>(restart));
  AscentState st;
  auto init = [&](std::vector<double>& v, int count) {
    v.assign(static_cast<std::size_t>(count) * k, 0.0);
    for (int i = 0; i < count; ++i) {
      double norm = 0.0;
      double* row = &v[static_cast<std::size_t>(i) * k];
      do {
        norm = 0.0;
        for (int r = 0; r < k; ++r) {
          row[r] = rng.Normal();
          norm += row[r] * row[r];
        }
      } while (norm == 0.0);
      norm = std::sqrt(norm);
      for (int r = 0; r < k; ++r) row[r] /= norm;
    }
  };
  init(st.x, m);
  init(st.y, n);
  double prev = -std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    double obj = 0.0;
    UpdateBlock(a, true, k, st.y, st.x, &obj);
    UpdateBlock(a, false, k, st.x, st.y, &obj);
    st.trace.push_back(obj);
    const bool converged =
        std::isfinite(prev) && obj - prev <= cfg.tolerance * std::abs(obj);
    prev = obj;
    if (converged) break;
  }
  st.value = prev;
  return st;
}

}  // namespace

BMResult GrothendieckBM(const Matrix& a, const BMConfig& cfg) {
  if (cfg.rank < 0) throw ValidationError("BM rank must be >= 1");
  if (cfg.restarts < 1) throw ValidationError("BM needs at least one restart");
  if (cfg.max_sweeps < 1) throw ValidationError("BM needs at least one sweep");
  const int m = a.rows();
  const int n = a.cols();
  const int k = cfg.rank > 0 ? cfg.rank : DefaultBMRank(m, n);
  BMResult out;
  out.rank = k;
  auto unit_rows = [k](int count) {
    std::vector<std::vector<double>> v(count, std::vector<double>(k, 0.0));
    for (auto& row : v) row[0] = 1.0;
    return v;
  };
  if (m == 0 || n == 0 || MaxAbsEntry(a) == 0.0) {
    out.witness.left = unit_rows(m);
    out.witness.right = unit_rows(n);
    return out;
  }
  AscentState best;
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    AscentState st = RunAscent(a, k, cfg, r);
    if (!have || st.value > best.value) {
      best = std::move(st);
      out.best_restart = r;
      have = true;
    }
  }
  out.sweeps = static_cast<int>(best.trace.size());
  out.trace = std::move(best.trace);
  out.witness.left.assign(m, std::vector<double>(k));
  out.witness.right.assign(n, std::vector<double>(k));
  for (int s = 0; s < m; ++s)
    std::copy_n(&best.x[static_cast<std::size_t>(s) * k], k,
                out.witness.left[s].begin());
  for (int t = 0; t < n; ++t)
    std::copy_n(&best.y[static_cast<std::size_t>(t) * k], k,
                out.witness.right[t].begin());
  out.value = BilinearObjective(a, out.witness);
  out.witness.objective = out.value;
  return out;
}

namespace {

GrothendieckBracket CombineBracket(int m, int n, double spectral,
                                   const BMResult& bm,
                                   const std::optional<double>& infty_one,
                                   const std::optional<double>& cut) {
  GrothendieckBracket b;
  b.bm_value = bm.value;
  b.rank = bm.rank;
  b.spectral = spectral;
  b.infty_one = infty_one;
  b.cut = cut;
  b.lower = bm.value;
  b.upper = std::sqrt(static_cast<double>(m) * n) * spectral;
  if (infty_one) {
    b.lower = std::max(b.lower, *infty_one);
    b.upper = std::min(b.upper, kGrothendieckConstant * *infty_one);
  }
  if (cut) b.upper = std::min(b.upper, kCutGrothendieckFactor * *cut);
  return b;
}

}  // namespace

GrothendieckBracket GrothendieckBounds(const Matrix& a, const BMConfig& cfg,
                                       int exact_limit) {
  if (a.rows() == 0 || a.cols() == 0 || MaxAbsEntry(a) == 0.0) {
    return GrothendieckBracket{};
  }
  const double spectral = SpectralNorm(a);
  const BMResult bm = GrothendieckBM(a, cfg);
  std::optional<double> infty_one, cut;
  if (a.rows() <= std::min(exact_limit, kMaxExactLimit)) {
    infty_one = InftyOneExact(a, exact_limit).value;
    cut = CutNormExact(a, exact_limit).value;
  }
  return CombineBracket(a.rows(), a.cols(), spectral, bm, infty_one, cut);
}

double GroupSpectral(const GroupFunction& f) {
  return SpectralNorm(MakeCayleyMatrix(f).matrix) / f.group().order();
}

double GroupSpectral(const ComplexGroupFunction& f) {
  const GroupTable& g = f.group();
  const int n = g.order();
  CMatrix a(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a(x, y) = f(g.mul(x, g.inv(y)));
  return SpectralNorm(Realify(a)) / n;
}

TranslateWitness MakeTranslateWitness(const GroupFunction& f,
                                      const GroupFunction& x,
                                      const GroupFunction& y) {
  if (!SameGroup(f.group(), x.group()) || !SameGroup(f.group(), y.group())) {
    throw ValidationError("translate witness: functions on different groups");
  }
  constexpr double kSlack = 1e-9;
  const double nx = FunctionNorm(x, 2.0);
  const double ny = FunctionNorm(y, 2.0);
  if (nx > 1.0 + kSlack || ny > 1.0 + kSlack) {
    throw ValidationError("translate witness: ||x||_2 = " + std::to_string(nx) +
                          ", ||y||_2 = " + std::to_string(ny) +
                          " exceed the unit ball");
  }
  const GroupTable& g = f.group();
  const int n = g.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  TranslateWitness w;
  w.vectors.left.assign(n, std::vector<double>(n));
  w.vectors.right.assign(n, std::vector<double>(n));
  for (int a = 0; a < n; ++a) {
    for (int h = 0; h < n; ++h) {
      w.vectors.left[a][h] = x(g.mul(a, h)) * scale;
      w.vectors.right[a][h] = y(g.mul(a, h)) * scale;
    }
  }
  double acc = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double fab = f(g.mul(a, g.inv(b)));
      if (fab == 0.0) continue;
      acc += fab * std::inner_product(w.vectors.left[a].begin(),
                                      w.vectors.left[a].end(),
                                      w.vectors.right[b].begin(), 0.0);
    }
  }
  w.objective = acc / (static_cast<double>(n) * n);
  w.vectors.objective = w.objective;
  return w;
}

Check MakeCheck(std::string name, double lhs, double rhs, double rel_tol) {
  Check c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  c.passed = c.margin >= -rel_tol * scale;
  return c;
}

std::vector<Check> VerifySandwich(const NormReport& r) {
  std::vector<Check> checks;
  const double root_mn = std::sqrt(static_cast<double>(r.rows) * r.cols);
  if (r.cut && r.infty_one) {
    checks.push_back(MakeCheck("cut <= infty_one", r.cut->value, r.infty_one->value));
    checks.push_back(
        MakeCheck("infty_one <= 4 cut", r.infty_one->value, 4.0 * r.cut->value));
  }
  if (r.infty_one) {
    checks.push_back(
        MakeCheck("infty_one <= groth_lower", r.infty_one->value, r.groth_lower));
    checks.push_back(MakeCheck("bm <= K_G infty_one", r.bm_value,
                               kGrothendieckConstant * r.infty_one->value));
  }
  checks.push_back(MakeCheck("groth_lower <= groth_upper", r.groth_lower, r.groth_upper));
  checks.push_back(
      MakeCheck("bm <= sqrt(mn) spectral", r.bm_value, root_mn * r.spectral));
  if (r.transitive.value_or(false)) {
    const double n_spec = r.rows * r.spectral;
    if (r.cut) {
      checks.push_back(MakeCheck("cut <= n spectral", r.cut->value, n_spec));
      checks.push_back(
          MakeCheck("n spectral <= 8 cut", n_spec, 8.0 * r.cut->value));
    }
    checks.push_back(
        MakeCheck("n spectral <= groth_lower", n_spec, r.groth_lower, 1e-6));
  }
  return checks;
}

NormReport AnalyzeMatrix(const Matrix& a, const AnalyzeOptions& opts) {
  using Clock = std::chrono::steady_clock;
  NormReport r;
  r.rows = a.rows();
  r.cols = a.cols();
  auto timed = [&](const char* stage, auto&& fn) {
    const auto start = Clock::now();
    fn();
    if (opts.record_timings) {
      r.timings.push_back(
          {stage, std::chrono::duration<double>(Clock::now() - start).count()});
    }
  };
  timed("spectral", [&] { r.spectral = SpectralNorm(a); });
  timed("cut", [&] {
    try {
      r.cut = CutNormExact(a, opts.exact_limit);
    } catch (const CapacityError& e) {
      r.notes.push_back(e.what());
    }
  });
  timed("infty_one", [&] {
    try {
      r.infty_one = InftyOneExact(a, opts.exact_limit);
    } catch (const CapacityError& e) {
      r.notes.push_back(e.what());
    }
  });
  BMResult bm;
  timed("grothendieck_bm", [&] { bm = GrothendieckBM(a, opts.bm); });
  r.bm_value = bm.value;
  r.bm_rank = bm.rank;
  r.bm_restarts = opts.bm.restarts;
  r.bm_witness = bm.witness;
  const GrothendieckBracket b = CombineBracket(
      r.rows, r.cols, r.spectral, bm,
      r.infty_one ? std::optional<double>(r.infty_one->value) : std::nullopt,
      r.cut ? std::optional<double>(r.cut->value) : std::nullopt);
  r.groth_lower = b.lower;
  r.groth_upper = b.upper;
  if (opts.detect_transitivity && a.square()) {
    timed("automorphisms", [&] {
      try {
        auto cert = FindTransitiveAutomorphisms(a);
        r.transitive = cert.has_value();
        if (cert) {
          r.automorphisms = cert->witnesses;
          if (cert->subgroup) {
            r.automorphism_subgroup_order = cert->subgroup->elements.size();
          } else {
            r.notes.push_back("automorphism closure exceeds the element cap");
          }
        }
      } catch (const CapacityError& e) {
        r.notes.push_back(e.what());
      }
    });
  }
  r.checks = VerifySandwich(r);
  return r;
}

namespace {

void RequireRegular(const Matrix& a, double d) {
  if (!a.square()) throw ValidationError("regular matrix must be square");
  const int n = a.rows();
  const double tol = 1e-9 * std::max(1.0, std::abs(d));
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < n; ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    if (std::abs(row - d) > tol || std::abs(col - d) > tol) {
      throw ValidationError("matrix is not " + std::to_string(d) +
                            "-regular at vertex " + std::to_string(i));
    }
  }
}

}  // namespace

Uniformity EpsilonUniformity(const Matrix& a, double d, int exact_limit,
                             const BMConfig& cfg) {
  RequireRegular(a, d);
  const int n = a.rows();
  const double dn = d * n;
  if (dn <= 0.0) throw ValidationError("uniformity needs positive degree");
  const Matrix centered = CenterRegular(a, d);
  Uniformity u;
  if (n <= std::min(exact_limit, kMaxExactLimit)) {
    u.cut = CutNormExact(centered, exact_limit);
    u.exact = true;
    u.low = u.high = u.cut->value / dn;
    return u;
  }
  const GrothendieckBracket b = GrothendieckBounds(centered, cfg, exact_limit);
  u.low = b.lower / kCutGrothendieckFactor / dn;
  u.high = b.upper / dn;
  return u;
}

MixingResult MixingLemmaCheck(const Matrix& a, double d, double lambda,
                              std::uint64_t seed) {
  if (!a.square()) throw ValidationError("mixing check needs a square matrix");
  const int n = a.rows();
  const double density = d / n;
  MixingResult out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  std::vector<double> root(static_cast<std::size_t>(n) * n + 1);
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = lambda * std::sqrt(double(i));
  auto record = [&](double e, int s_size, int t_size, std::uint64_t s,
                    std::uint64_t t) {
    const int prod = s_size * t_size;
    const double bound = root[prod];
    const double margin = bound - std::abs(e - density * prod);
    ++out.pairs_checked;
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.worst_s = s;
      out.worst_t = t;
    }
    if (margin < -1e-9 * std::max(1.0, bound)) out.holds = false;
  };
  if (n <= kMaxExhaustiveMixingOrder) {
    out.exhaustive = true;
    const std::size_t count = std::size_t{1} << n;
    std::vector<double> c(n), e(count);
    for (std::size_t s = 0; s < count; ++s) {
      std::fill(c.begin(), c.end(), 0.0);
      for (std::uint64_t bits = s; bits; bits &= bits - 1) {
        const auto r = a.row(std::countr_zero(bits));
        for (int t = 0; t < n; ++t) c[t] += r[t];
      }
      e[0] = 0.0;
      for (std::size_t t = 1; t < count; ++t) {
        e[t] = e[t & (t - 1)] + c[std::countr_zero(t)];
      }
      const int s_size = std::popcount(s);
      for (std::size_t t = 0; t < count; ++t) {
        record(e[t], s_size, std::popcount(t), s, t);
      }
    }
    return out;
  }
  CounterRng rng(seed, 0x6d6978);
  std::vector<char> in_s(n), in_t(n);
  for (long long i = 0; i < kMixingSamplePairs; ++i) {
    int s_size = 0, t_size = 0;
    std::uint64_t s_mask = 0, t_mask = 0;
    for (int v = 0; v < n; ++v) {
      in_s[v] = rng.NextU64() & 1;
      in_t[v] = rng.NextU64() & 1;
      s_size += in_s[v];
      t_size += in_t[v];
      if (v < 64) {
        s_mask |= std::uint64_t(in_s[v]) << v;
        t_mask |= std::uint64_t(in_t[v]) << v;
      }
    }
    double e = 0.0;
    for (int s = 0; s < n; ++s) {
      if (!in_s[s]) continue;
      for (int t = 0; t < n; ++t)
        if (in_t[t]) e += a(s, t);
    }
    record(e, s_size, t_size, s_mask, t_mask);
  }
  return out;
}

EigenvalueBoundResult EigenvalueBoundCheck(const Matrix& a, double d, int exact_limit) {
  if (a.rows() > std::min(exact_limit, kMaxExactLimit)) {
    throw CapacityError("lambda <= 8 eps d check needs exact eps (n <= " +
                        std::to_string(std::min(exact_limit, kMaxExactLimit)) + ")");
  }
  EigenvalueBoundResult r;
  r.degree = d;
  r.lambda = SymmetricSpectrum(a).lambda2;
  r.epsilon = EpsilonUniformity(a, d, exact_limit).high;
  const double bound = kCutGrothendieckFactor * r.epsilon * d;
  r.holds = r.lambda <= bound + 1e-9 * std::max(1.0, bound);
  r.ratio = r.epsilon * d > 0.0 ? r.lambda / (r.epsilon * d)
                                : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace quasi
