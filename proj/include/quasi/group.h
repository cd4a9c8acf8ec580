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

#ifndef QUASI_GROUP_H_
#define QUASI_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasi/matrix.h"

namespace quasi {

// Largest order for which a full multiplication table is materialized.
inline constexpr int kMaxTableOrder = 8192;
// Default cap on permutation-group closure.
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// How a table was built. Fourier code uses this to pick shipped irreps.
struct GroupFamily {
  enum class Kind { kCustom, kCyclic, kDihedral, kSymmetric, kProduct };
  Kind kind = Kind::kCustom;
  int param = 0;                     // n for cyclic, m for dihedral/symmetric
  std::vector<GroupFamily> factors;  // product factors, in order

  static GroupFamily Cyclic(int n) { return {Kind::kCyclic, n, {}}; }
  static GroupFamily Dihedral(int m) { return {Kind::kDihedral, m, {}}; }
  static GroupFamily Symmetric(int m) { return {Kind::kSymmetric, m, {}}; }
  static GroupFamily Product(GroupFamily a, GroupFamily b) {
    return {Kind::kProduct, 0, {std::move(a), std::move(b)}};
  }
  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

// Finite group given by its Cayley table. Element 0 is the identity.
//
// Elements of the built-in families are indexed as follows:
//   cyclic(n):    g            <-> g mod n
//   dihedral(m):  k + m*e      <-> r^k s^e, with s r s^-1 = r^-1
//   symmetric(m): lexicographic rank of the image array, composed as
//                 (gh)(s) = h(g(s))
//   product(G,H): g*|H| + h    <-> (g, h)
class GroupTable {
 public:
  // Validates every axiom. Throws ValidationError naming the failing
  // element or triple; the table must already have identity at index 0.
  GroupTable(std::vector<int> mul, int order, std::string label,
             GroupFamily family = {});

  int order() const { return order_; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }
  const std::string& label() const { return label_; }
  const GroupFamily& family() const { return family_; }
  std::span<const int> table() const { return mul_; }
  std::span<const int> inverses() const { return inv_; }

  bool IsAbelian() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::string label_;
  GroupFamily family_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupPtr Cyclic(int n);
GroupPtr Dihedral(int m);
GroupPtr Symmetric(int m);
GroupPtr Product(const GroupTable& g, const GroupTable& h);

// Accepts any valid square Cayley table, finds its identity and relabels it
// to index 0 by swapping it with the element currently at index 0.
GroupPtr BuildFromTable(const std::vector<std::vector<int>>& raw,
                        std::string label = "custom");

// Permutation of [0, n). Products follow (gh)(s) = h(g(s)): apply g first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation Identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_[s]; }
  const std::vector<int>& images() const { return images_; }

  Permutation Inverse() const;
  // this first, then other.
  Permutation Then(const Permutation& other) const;
  bool IsIdentity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  // Breadth-first from the identity, generators applied in list order.
  std::vector<Permutation> elements;

  bool IsTransitive() const;
};

// Subgroup generated by `gens`. Throws CapacityError past `cap` elements.
PermGroup GroupClosure(int degree, std::vector<Permutation> gens,
                       std::size_t cap = kDefaultClosureCap);

// Multiplication table of a permutation group, element i of the table being
// elements[i]; mul[g][h] is the permutation "g then h".
GroupPtr ToTable(const PermGroup& group, std::string label = "perm");

// Function on a group. Norms use the averaging measure.
template <typename T>
class BasicGroupFunction {
 public:
  BasicGroupFunction(GroupPtr group, std::vector<T> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw ValidationError("group function without group");
    if (static_cast<int>(values_.size()) != group_->order()) {
      throw ValidationError("group function length " +
                            std::to_string(values_.size()) +
                            " does not match group order " +
                            std::to_string(group_->order()));
    }
  }
  BasicGroupFunction(GroupPtr group, T fill)
      : BasicGroupFunction(group, std::vector<T>(group->order(), fill)) {}

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(values_.size()); }
  const T& operator()(int g) const { return values_[g]; }
  T& operator()(int g) { return values_[g]; }
  const std::vector<T>& values() const { return values_; }

 private:
  GroupPtr group_;
  std::vector<T> values_;
};

using GroupFunction = BasicGroupFunction<double>;
using ComplexGroupFunction = BasicGroupFunction<Complex>;

// Same underlying group (pointer identity or identical tables).
bool SameGroup(const GroupTable& a, const GroupTable& b);

// (f1 * f2)(g) = E_h f1(g h^-1) f2(h).
GroupFunction Convolve(const GroupFunction& f1, const GroupFunction& f2);
ComplexGroupFunction Convolve(const ComplexGroupFunction& f1,
                              const ComplexGroupFunction& f2);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// (E_g |f(g)|^p)^(1/p); p = kInfinity gives max |f(g)|.
double FunctionNorm(const GroupFunction& f, double p);
double FunctionNorm(const ComplexGroupFunction& f, double p);

ComplexGroupFunction ToComplex(const GroupFunction& f);

}  // namespace quasi

#endif  // QUASI_GROUP_H_
