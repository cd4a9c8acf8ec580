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

#include "quasi/group.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "quasi/rng.h"

namespace quasi {
namespace {

constexpr int kExhaustiveAssociativityOrder = 256;
constexpr int kSampledAssociativityTriples = 1'000'000;

std::string Triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void CheckOrder(long long order) {
  if (order < 1) throw ValidationError("group order must be positive");
  if (order > kMaxTableOrder) {
    throw CapacityError("group of order " + std::to_string(order) +
                        " exceeds the table capacity " +
                        std::to_string(kMaxTableOrder));
  }
}

// Lehmer-code rank of a permutation of [0, m), matching lexicographic order.
int LexRank(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j) smaller += p[j] < p[i];
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

}  // namespace

GroupTable::GroupTable(std::vector<int> mul, int order, std::string label,
                       GroupFamily family)
    : order_(order),
      mul_(std::move(mul)),
      label_(std::move(label)),
      family_(std::move(family)) {
  CheckOrder(order_);
  const int n = order_;
  if (mul_.size() != static_cast<std::size_t>(n) * n) {
    throw ValidationError("multiplication table is not " + std::to_string(n) +
                          "x" + std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = this->mul(a, b);
      if (ab < 0 || ab >= n) {
        throw ValidationError("closure fails: " + std::to_string(a) + "*" +
                              std::to_string(b) + " = " + std::to_string(ab) +
                              " is out of range");
      }
    }
  }
  for (int g = 0; g < n; ++g) {
    if (this->mul(0, g) != g || this->mul(g, 0) != g) {
      throw ValidationError("element 0 is not an identity (fails at element " +
                            std::to_string(g) + ")");
    }
  }
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (this->mul(g, h) == 0) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0 || this->mul(inv_[g], g) != 0) {
      throw ValidationError("element " + std::to_string(g) + " has no inverse");
    }
  }
  auto check = [&](int a, int b, int c) {
    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) {
      throw ValidationError("associativity fails at triple " + Triple(a, b, c));
    }
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    CounterRng rng(0, static_cast<std::uint64_t>(n));
    for (int i = 0; i < kSampledAssociativityTriples; ++i) {
      check(static_cast<int>(rng.Below(n)), static_cast<int>(rng.Below(n)),
            static_cast<int>(rng.Below(n)));
    }
  }
}

bool GroupTable::IsAbelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupPtr Cyclic(int n) {
  CheckOrder(n);
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return std::make_shared<GroupTable>(std::move(mul), n, "Z" + std::to_string(n),
                                      GroupFamily::Cyclic(n));
}

GroupPtr Dihedral(int m) {
  if (m < 1) throw ValidationError("dihedral(m) requires m >= 1");
  CheckOrder(2LL * m);
  const int n = 2 * m;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const int a = x % m, e = x / m;
    for (int y = 0; y < n; ++y) {
      const int b = y % m, f = y / m;
      // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
      const int k = ((e == 0 ? a + b : a - b) % m + m) % m;
      mul[static_cast<std::size_t>(x) * n + y] = k + m * ((e + f) % 2);
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), n, "D" + std::to_string(m),
                                      GroupFamily::Dihedral(m));
}

GroupPtr Symmetric(int m) {
  if (m < 1) throw ValidationError("symmetric(m) requires m >= 1");
  long long factorial = 1;
  for (int i = 2; i <= m; ++i) {
    factorial *= i;
    if (factorial > 1'000'000) {
      throw CapacityError("symmetric(" + std::to_string(m) +
                          ") has more than 10^6 elements");
    }
  }
  CheckOrder(factorial);
  const int n = static_cast<int>(factorial);
  std::vector<std::vector<int>> perms;
  perms.reserve(n);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> prod(m);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      for (int s = 0; s < m; ++s) prod[s] = perms[h][perms[g][s]];
      mul[static_cast<std::size_t>(g) * n + h] = LexRank(prod);
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), n, "S" + std::to_string(m),
                                      GroupFamily::Symmetric(m));
}

GroupPtr Product(const GroupTable& g, const GroupTable& h) {
  const long long order = static_cast<long long>(g.order()) * h.order();
  CheckOrder(order);
  const int n = static_cast<int>(order);
  const int nh = h.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[static_cast<std::size_t>(x) * n + y] =
          g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  return std::make_shared<GroupTable>(
      std::move(mul), n, g.label() + "x" + h.label(),
      GroupFamily::Product(g.family(), h.family()));
}

GroupPtr BuildFromTable(const std::vector<std::vector<int>>& raw,
                        std::string label) {
  const long long n_ll = static_cast<long long>(raw.size());
  CheckOrder(n_ll);
  const int n = static_cast<int>(n_ll);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(raw[a].size()) != n) {
      throw ValidationError("table is not square (row " + std::to_string(a) +
                            " has " + std::to_string(raw[a].size()) +
                            " entries)");
    }
    for (int v : raw[a]) {
      if (v < 0 || v >= n) {
        throw ValidationError("closure fails: entry " + std::to_string(v) +
                              " in row " + std::to_string(a) +
                              " is out of range");
      }
    }
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = raw[c][g] == g && raw[g][c] == g;
    if (ok) e = c;
  }
  if (e < 0) throw ValidationError("table has no identity element");
  // Swap labels 0 and e.
  auto relabel = [e](int x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(relabel(a)) * n + relabel(b)] =
          relabel(raw[a][b]);
  return std::make_shared<GroupTable>(std::move(mul), n, std::move(label));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw ValidationError("permutation images are not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::Inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) out[images_[s]] = static_cast<int>(s);
  return Permutation(std::move(out));
}

Permutation Permutation::Then(const Permutation& other) const {
  if (other.degree() != degree()) {
    throw ValidationError("composing permutations of different degree");
  }
  std::vector<int> out(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) out[s] = other.images_[images_[s]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::IsIdentity() const {
  for (std::size_t s = 0; s < images_.size(); ++s)
    if (images_[s] != static_cast<int>(s)) return false;
  return true;
}

bool PermGroup::IsTransitive() const {
  std::vector<char> hit(degree, 0);
  int count = 0;
  for (const Permutation& g : elements) {
    if (!hit[g(0)]) {
      hit[g(0)] = 1;
      ++count;
    }
  }
  return count == degree;
}

PermGroup GroupClosure(int degree, std::vector<Permutation> gens,
                       std::size_t cap) {
  if (degree < 1) throw ValidationError("permutation degree must be positive");
  for (const Permutation& g : gens) {
    if (g.degree() != degree) {
      throw ValidationError("generator degree " + std::to_string(g.degree()) +
                            " does not match " + std::to_string(degree));
    }
  }
  PermGroup out;
  out.degree = degree;
  out.generators = std::move(gens);
  std::unordered_map<std::vector<int>, std::size_t, ImagesHash> index;
  out.elements.push_back(Permutation::Identity(degree));
  index.emplace(out.elements.front().images(), 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const Permutation& gen : out.generators) {
      Permutation next = out.elements[head].Then(gen);
      if (index.contains(next.images())) continue;
      if (out.elements.size() >= cap) {
        throw CapacityError("permutation group closure exceeds " +
                            std::to_string(cap) + " elements");
      }
      index.emplace(next.images(), out.elements.size());
      out.elements.push_back(std::move(next));
    }
  }
  return out;
}

GroupPtr ToTable(const PermGroup& group, std::string label) {
  const long long n_ll = static_cast<long long>(group.elements.size());
  CheckOrder(n_ll);
  const int n = static_cast<int>(n_ll);
  if (!group.elements.front().IsIdentity()) {
    throw ValidationError("permutation group must list the identity first");
  }
  std::unordered_map<std::vector<int>, int, ImagesHash> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(group.elements[i].images(), i).second) {
      throw ValidationError("permutation group lists element " +
                            std::to_string(i) + " twice");
    }
  }
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      auto it = index.find(group.elements[g].Then(group.elements[h]).images());
      if (it == index.end()) {
        throw ValidationError("permutation group is not closed at (" +
                              std::to_string(g) + ", " + std::to_string(h) + ")");
      }
      mul[static_cast<std::size_t>(g) * n + h] = it->second;
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), n, std::move(label));
}

bool SameGroup(const GroupTable& a, const GroupTable& b) {
  return &a == &b || a == b;
}

namespace {

template <typename T>
BasicGroupFunction<T> ConvolveImpl(const BasicGroupFunction<T>& f1,
                                   const BasicGroupFunction<T>& f2) {
  if (!SameGroup(f1.group(), f2.group())) {
    throw ValidationError("convolution of functions on different groups");
  }
  const GroupTable& g = f1.group();
  const int n = g.order();
  std::vector<T> out(n, T{});
  for (int x = 0; x < n; ++x) {
    T acc{};
    for (int h = 0; h < n; ++h) acc += f1(g.mul(x, g.inv(h))) * f2(h);
    out[x] = acc / static_cast<double>(n);
  }
  return BasicGroupFunction<T>(f1.group_ptr(), std::move(out));
}

template <typename T>
double NormImpl(const BasicGroupFunction<T>& f, double p) {
  if (!(p >= 1.0)) throw ValidationError("function norm needs p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const T& v : f.values()) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }
  double acc = 0.0;
  for (const T& v : f.values()) acc += std::pow(static_cast<double>(std::abs(v)), p);
  return std::pow(acc / f.size(), 1.0 / p);
}

}  // namespace

GroupFunction Convolve(const GroupFunction& f1, const GroupFunction& f2) {
  return ConvolveImpl(f1, f2);
}
ComplexGroupFunction Convolve(const ComplexGroupFunction& f1,
                              const ComplexGroupFunction& f2) {
  return ConvolveImpl(f1, f2);
}

double FunctionNorm(const GroupFunction& f, double p) { return NormImpl(f, p); }
double FunctionNorm(const ComplexGroupFunction& f, double p) {
  return NormImpl(f, p);
}

ComplexGroupFunction ToComplex(const GroupFunction& f) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  return ComplexGroupFunction(f.group_ptr(), std::move(v));
}

}  // namespace quasi
