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

#include "quasi/cayley.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace quasi {

CayleyMatrix MakeCayleyMatrix(const GroupFunction& f) {
  const GroupTable& g = f.group();
  const int n = g.order();
  Matrix a(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a(x, y) = f(g.mul(x, g.inv(y)));
  bool symmetric = true;
  for (int x = 0; x < n && symmetric; ++x) symmetric = f(x) == f(g.inv(x));
  return CayleyMatrix{f.group_ptr(), f, std::move(a), symmetric};
}

CayleyMatrix CayleyFromSet(GroupPtr group, const std::vector<int>& set) {
  std::vector<double> ind(group->order(), 0.0);
  for (int s : set) {
    if (s < 0 || s >= group->order()) {
      throw ValidationError("Cayley set element " + std::to_string(s) +
                            " is out of range for a group of order " +
                            std::to_string(group->order()));
    }
    ind[s] = 1.0;
  }
  return MakeCayleyMatrix(GroupFunction(std::move(group), std::move(ind)));
}

bool IsAutomorphism(const Matrix& a, const Permutation& p) {
  if (!a.square() || p.degree() != a.rows()) return false;
  const int n = a.rows();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (a(p(s), p(t)) != a(s, t)) return false;
  return true;
}

namespace {

// Weighted color refinement. Automorphisms preserve the resulting colors,
// so only same-colored vertices are candidate images.
std::vector<int> RefinedColors(const Matrix& a) {
  const int n = a.rows();
  std::vector<int> color(n, 0);
  {
    std::map<std::vector<double>, int> ids;
    for (int v = 0; v < n; ++v) {
      std::vector<double> row(a.row(v).begin(), a.row(v).end());
      std::vector<double> col(n);
      for (int w = 0; w < n; ++w) col[w] = a(w, v);
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      std::vector<double> key{a(v, v)};
      key.insert(key.end(), row.begin(), row.end());
      key.insert(key.end(), col.begin(), col.end());
      color[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
  }
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  using Key = std::pair<int, std::vector<std::pair<double, int>>>;
  while (true) {
    std::map<std::pair<Key, std::vector<std::pair<double, int>>>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<double, int>> out, in;
      out.reserve(n);
      in.reserve(n);
      for (int w = 0; w < n; ++w) {
        out.emplace_back(a(v, w), color[w]);
        in.emplace_back(a(w, v), color[w]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      auto key = std::make_pair(Key{color[v], std::move(out)}, std::move(in));
      next[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    const int next_classes = static_cast<int>(ids.size());
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Matrix& a, std::vector<int> color)
      : a_(a), n_(a.rows()), color_(std::move(color)) {}

  std::optional<Permutation> FirstMapping(int base_image) {
    if (color_[0] != color_[base_image]) return std::nullopt;
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    image_[0] = base_image;
    used_[base_image] = 1;
    if (!Extend(1)) return std::nullopt;
    return Permutation(image_);
  }

 private:
  bool Consistent(int v, int c) const {
    for (int u = 0; u < v; ++u) {
      if (a_(u, v) != a_(image_[u], c) || a_(v, u) != a_(c, image_[u])) {
        return false;
      }
    }
    return true;
  }

  bool Extend(int v) {
    if (v == n_) return true;
    for (int c = 0; c < n_; ++c) {
      if (used_[c] || color_[c] != color_[v] || !Consistent(v, c)) continue;
      image_[v] = c;
      used_[c] = 1;
      if (Extend(v + 1)) return true;
      used_[c] = 0;
      image_[v] = -1;
    }
    return false;
  }

  const Matrix& a_;
  int n_;
  std::vector<int> color_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<TransitiveCertificate> FindTransitiveAutomorphisms(
    const Matrix& a, std::size_t closure_cap) {
  if (!a.square()) throw ValidationError("automorphism search needs a square matrix");
  const int n = a.rows();
  if (n > kMaxAutomorphismSearchDegree) {
    throw CapacityError("automorphism search is limited to n <= " +
                        std::to_string(kMaxAutomorphismSearchDegree) + " (got " +
                        std::to_string(n) + ")");
  }
  if (n == 0) return std::nullopt;
  AutomorphismSearch search(a, RefinedColors(a));
  TransitiveCertificate cert;
  for (int t = 0; t < n; ++t) {
    std::optional<Permutation> p = search.FirstMapping(t);
    if (!p) return std::nullopt;
    cert.witnesses.push_back(std::move(*p));
  }
  try {
    cert.subgroup = GroupClosure(n, cert.witnesses, closure_cap);
  } catch (const CapacityError&) {
    cert.subgroup.reset();
  }
  return cert;
}

LiftedFunction LiftToGroup(const Matrix& a, const PermGroup& perms) {
  if (!a.square() || a.rows() != perms.degree) {
    throw ValidationError("lift: matrix size does not match permutation degree");
  }
  const int n = a.rows();
  for (std::size_t gi = 0; gi < perms.elements.size(); ++gi) {
    const Permutation& g = perms.elements[gi];
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (a(g(s), g(t)) != a(s, t)) {
          throw ValidationError("lift: element " + std::to_string(gi) +
                                " is not an automorphism: a(g(" +
                                std::to_string(s) + "), g(" + std::to_string(t) +
                                ")) != a(" + std::to_string(s) + ", " +
                                std::to_string(t) + ")");
        }
      }
    }
  }
  if (!perms.IsTransitive()) {
    throw ValidationError("lift: permutation group is not transitive");
  }
  GroupPtr table = ToTable(perms, "Aut");
  std::vector<double> values(perms.elements.size());
  for (std::size_t gi = 0; gi < perms.elements.size(); ++gi) {
    values[gi] = a(perms.elements[gi](0), 0);
  }
  GroupFunction f(table, std::move(values));
  return LiftedFunction{std::move(table), std::move(f)};
}

Matrix CenterRegular(const Matrix& a, double d) {
  if (!a.square()) throw ValidationError("CenterRegular needs a square matrix");
  const int n = a.rows();
  Matrix out = a;
  const double shift = d / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) -= shift;
  return out;
}

}  // namespace quasi
