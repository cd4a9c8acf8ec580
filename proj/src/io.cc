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

#include "quasi/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace quasi {
namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Json ComplexToJson(Complex v) { return Json::array({v.real(), v.imag()}); }

Complex ComplexFromJson(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string FamilyToString(const GroupFamily& f) {
  switch (f.kind) {
    case GroupFamily::Kind::kCyclic:
      return "cyclic:" + std::to_string(f.param);
    case GroupFamily::Kind::kDihedral:
      return "dihedral:" + std::to_string(f.param);
    case GroupFamily::Kind::kSymmetric:
      return "symmetric:" + std::to_string(f.param);
    case GroupFamily::Kind::kProduct:
      return "product(" + FamilyToString(f.factors.at(0)) + "," +
             FamilyToString(f.factors.at(1)) + ")";
    default:
      return "custom";
  }
}

GroupFamily FamilyFromString(const std::string& s) {
  if (s == "custom") return {};
  if (s.rfind("product(", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(8, s.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return GroupFamily::Product(FamilyFromString(inner.substr(0, i)),
                                    FamilyFromString(inner.substr(i + 1)));
      }
    }
    throw ParseError("malformed product family '" + s + "'");
  }
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("unknown group family '" + s + "'");
  const std::string kind = s.substr(0, colon);
  int param = 0;
  const std::string digits = s.substr(colon + 1);
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), param);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("bad family parameter in '" + s + "'");
  }
  if (kind == "cyclic") return GroupFamily::Cyclic(param);
  if (kind == "dihedral") return GroupFamily::Dihedral(param);
  if (kind == "symmetric") return GroupFamily::Symmetric(param);
  throw ParseError("unknown group family '" + s + "'");
}

GroupPtr MakeGroup(const GroupFamily& f) {
  switch (f.kind) {
    case GroupFamily::Kind::kCyclic:
      return Cyclic(f.param);
    case GroupFamily::Kind::kDihedral:
      return Dihedral(f.param);
    case GroupFamily::Kind::kSymmetric:
      return Symmetric(f.param);
    case GroupFamily::Kind::kProduct:
      return Product(*MakeGroup(f.factors.at(0)), *MakeGroup(f.factors.at(1)));
    default:
      throw ValidationError("custom groups have no constructor; supply a table");
  }
}

Json GroupToJson(const GroupTable& g) {
  Json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["mul"] = std::vector<int>(g.table().begin(), g.table().end());
  j["inv"] = std::vector<int>(g.inverses().begin(), g.inverses().end());
  j["family"] = FamilyToString(g.family());
  return j;
}

GroupPtr GroupFromJson(const Json& j) {
  const auto label = Field<std::string>(j, "label");
  const auto order = Field<int>(j, "order");
  const auto mul = Field<std::vector<int>>(j, "mul");
  if (order < 1 || mul.size() != static_cast<std::size_t>(order) * order) {
    throw ParseError("mul must hold order^2 entries");
  }
  GroupFamily family;
  if (j.contains("family")) family = FamilyFromString(Field<std::string>(j, "family"));
  GroupPtr g;
  if (mul[0] == 0) {
    g = std::make_shared<GroupTable>(mul, order, label, family);
  } else {
    std::vector<std::vector<int>> raw(order);
    for (int a = 0; a < order; ++a)
      raw[a].assign(mul.begin() + static_cast<std::ptrdiff_t>(a) * order,
                    mul.begin() + static_cast<std::ptrdiff_t>(a + 1) * order);
    g = BuildFromTable(raw, label);
  }
  if (j.contains("inv") && mul[0] == 0) {
    const auto inv = Field<std::vector<int>>(j, "inv");
    if (!std::equal(inv.begin(), inv.end(), g->inverses().begin(), g->inverses().end())) {
      throw ParseError("inv does not match the multiplication table");
    }
  }
  return g;
}

Json PermGroupToJson(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree;
  Json gens = Json::array();
  for (const Permutation& p : g.generators) gens.push_back(p.images());
  j["generators"] = std::move(gens);
  return j;
}

PermGroup PermGroupFromJson(const Json& j, std::size_t cap) {
  const auto degree = Field<int>(j, "degree");
  const auto raw = Field<std::vector<std::vector<int>>>(j, "generators");
  std::vector<Permutation> gens;
  for (const auto& images : raw) gens.emplace_back(images);
  return GroupClosure(degree, std::move(gens), cap);
}

Json MatrixToJson(const Matrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["entries"] = a.data();
  return j;
}

Matrix MatrixFromJson(const Json& j) {
  if (j.is_object() && j.contains("edges")) {
    const auto n = Field<int>(j, "n");
    const auto edges = Field<std::vector<std::pair<int, int>>>(j, "edges");
    return FromEdgeList(n, edges);
  }
  const auto rows = Field<int>(j, "rows");
  const auto cols = Field<int>(j, "cols");
  auto entries = Field<std::vector<double>>(j, "entries");
  if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
  if (entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw ParseError("entries must hold rows*cols values");
  }
  for (double v : entries)
    if (!std::isfinite(v)) throw ParseError("matrix entries must be finite");
  return Matrix(rows, cols, std::move(entries));
}

Json ProvenanceToJson(const Provenance& p) {
  Json j;
  j["family"] = p.family;
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  j["params"] = std::move(params);
  j["seed"] = p.seed;
  j["tool_version"] = kToolVersion;
  return j;
}

Json IrrepsToJson(const IrrepTable& t) {
  Json j;
  j["group"] = t.group ? t.group->label() : "";
  Json irreps = Json::array();
  for (const Irrep& rho : t.irreps) {
    Json r;
    r["dim"] = rho.dim;
    Json mats = Json::array();
    for (const CMatrix& m : rho.matrices) {
      Json entries = Json::array();
      for (const Complex& v : m.data()) entries.push_back(ComplexToJson(v));
      mats.push_back(std::move(entries));
    }
    r["matrices"] = std::move(mats);
    irreps.push_back(std::move(r));
  }
  j["irreps"] = std::move(irreps);
  return j;
}

IrrepTable ParseIrreps(const Json& j, GroupPtr group) {
  if (!j.is_object() || !j.contains("irreps") || !j["irreps"].is_array()) {
    throw ParseError("irrep document needs an 'irreps' array");
  }
  IrrepTable table;
  table.group = group;
  for (const Json& r : j["irreps"]) {
    Irrep rho;
    rho.dim = Field<int>(r, "dim");
    if (rho.dim < 1) throw ParseError("irrep dimension must be positive");
    if (!r.contains("matrices") || !r["matrices"].is_array()) {
      throw ParseError("irrep needs a 'matrices' array");
    }
    for (const Json& m : r["matrices"]) {
      if (!m.is_array() || m.size() != static_cast<std::size_t>(rho.dim) * rho.dim) {
        throw ParseError("each irrep matrix must hold dim*dim entries");
      }
      std::vector<Complex> entries;
      for (const Json& v : m) entries.push_back(ComplexFromJson(v));
      rho.matrices.emplace_back(rho.dim, rho.dim, std::move(entries));
    }
    table.irreps.push_back(std::move(rho));
  }
  const std::vector<Diagnostic> diags = ValidateIrrepTable(table);
  if (!diags.empty()) {
    std::string msg = "irrep table failed validation:";
    for (std::size_t i = 0; i < diags.size() && i < 3; ++i) msg += " [" + diags[i].kind + ": " + diags[i].message + "]";
    throw ValidationError(msg);
  }
  return table;
}

Json GroupFunctionToJson(const GroupFunction& f) {
  Json j;
  j["group"] = f.group().label();
  j["values"] = f.values();
  return j;
}

Json ComplexGroupFunctionToJson(const ComplexGroupFunction& f) {
  Json j;
  j["group"] = f.group().label();
  Json values = Json::array();
  for (const Complex& v : f.values()) values.push_back(ComplexToJson(v));
  j["values"] = std::move(values);
  return j;
}

ComplexGroupFunction ComplexGroupFunctionFromJson(const Json& j, GroupPtr group) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw ParseError("group function needs a 'values' array");
  }
  std::vector<Complex> values;
  for (const Json& v : j["values"]) values.push_back(ComplexFromJson(v));
  return ComplexGroupFunction(std::move(group), std::move(values));
}

Json ReportToJson(const NormReport& r) {
  Json j;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["spectral"] = r.spectral;
  if (r.cut) {
    j["cut"] = {{"value", r.cut->value}, {"rows", r.cut->rows}, {"cols", r.cut->cols}};
  } else {
    j["cut"] = nullptr;
  }
  if (r.infty_one) {
    j["infty_one"] = {{"value", r.infty_one->value}, {"x", r.infty_one->x},
                      {"y", r.infty_one->y}};
  } else {
    j["infty_one"] = nullptr;
  }
  j["grothendieck"] = {{"lower", r.groth_lower},
                       {"upper", r.groth_upper},
                       {"bm_value", r.bm_value},
                       {"rank", r.bm_rank},
                       {"restarts", r.bm_restarts},
                       {"left", r.bm_witness.left},
                       {"right", r.bm_witness.right}};
  if (r.transitive) {
    Json t;
    t["transitive"] = *r.transitive;
    Json autos = Json::array();
    for (const Permutation& p : r.automorphisms) autos.push_back(p.images());
    t["automorphisms"] = std::move(autos);
    if (r.automorphism_subgroup_order) {
      t["subgroup_order"] = *r.automorphism_subgroup_order;
    } else {
      t["subgroup_order"] = nullptr;
    }
    j["transitivity"] = std::move(t);
  } else {
    j["transitivity"] = nullptr;
  }
  Json checks = Json::array();
  bool all = true;
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"margin", c.margin},
                      {"passed", c.passed}});
    all = all && c.passed;
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = all;
  j["notes"] = r.notes;
  if (!r.timings.empty()) {
    Json t = Json::object();
    for (const auto& timing : r.timings) t[timing.stage] = timing.seconds;
    j["timings"] = std::move(t);
  }
  return j;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

std::string Render(const Json& j) { return j.dump(2) + "\n"; }

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << Render(j);
}

}  // namespace quasi
