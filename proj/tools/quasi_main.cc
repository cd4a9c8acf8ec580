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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quasi/cayley.h"
#include "quasi/constructions.h"
#include "quasi/errors.h"
#include "quasi/fourier.h"
#include "quasi/io.h"
#include "quasi/norms.h"
#include "quasi/rng.h"
#include "quasi/suites.h"

namespace {

using quasi::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  int rank = 0;
  int restarts = 8;
  int exact_limit = quasi::kDefaultExactLimit;
  bool quiet = false;
};

void Emit(const Globals& g, const Json& doc) {
  if (g.out.empty()) {
    std::cout << quasi::Render(doc);
  } else {
    quasi::WriteJsonFile(g.out, doc);
  }
}

void Say(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << "\n";
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Json GraphDoc(const quasi::RegularGraph& g) {
  Json doc;
  doc["kind"] = "graph";
  doc["n"] = g.n;
  doc["degree"] = g.degree;
  const Json m = quasi::MatrixToJson(g.adjacency);
  for (const auto& [k, v] : m.items()) doc[k] = v;
  doc["provenance"] = quasi::ProvenanceToJson(g.provenance);
  return doc;
}

// Re-parses an emitted graph document and re-validates it.
void CheckGraphRoundTrip(const Json& doc, const quasi::RegularGraph& g) {
  const Json back = Json::parse(quasi::Render(doc));
  const quasi::Matrix a = quasi::MatrixFromJson(back);
  if (!(a == g.adjacency)) throw quasi::ValidationError("emitted graph does not re-parse");
  quasi::RegularGraph copy = g;
  copy.adjacency = a;
  quasi::ValidateRegularGraph(copy);
}

std::vector<int> ParseIntList(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw quasi::ParseError("bad integer '" + item + "' in list '" + s + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

quasi::GroupPtr LoadGroup(const std::string& family, const std::string& group_file) {
  if (!group_file.empty()) return quasi::GroupFromJson(quasi::ReadJsonFile(group_file));
  if (family.empty()) throw quasi::ParseError("need --group or --group-file");
  return quasi::MakeGroup(quasi::FamilyFromString(family));
}

Json CMatrixToJson(const quasi::CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json CheckToJson(const quasi::Check& c) {
  return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin},
          {"passed", c.passed}};
}

// Equality check |a - b| <= tol * max(1, |b|).
quasi::Check NearCheck(std::string name, double a, double b, double tol) {
  const double allow = tol * std::max(1.0, std::abs(b));
  const double dev = std::abs(a - b);
  return {std::move(name), dev, allow, allow - dev, dev <= allow};
}

int FinishChecks(const Globals& g, Json& doc, const std::vector<quasi::Check>& checks) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back(CheckToJson(c));
    all = all && c.passed;
    if (!c.passed) Say(g, "check failed: " + c.name + " (lhs " + Num(c.lhs) + ", rhs " + Num(c.rhs) + ")");
  }
  doc["checks"] = std::move(arr);
  doc["all_passed"] = all;
  Emit(g, doc);
  return all ? kExitOk : kExitVerifyFailed;
}

int RunAnalyze(const Globals& g, const std::string& path, bool center, bool timings) {
  const Json input = quasi::ReadJsonFile(path);
  quasi::Matrix a = quasi::MatrixFromJson(input);
  std::optional<double> degree;
  if (center) {
    if (!a.square()) throw quasi::ValidationError("--center needs a square matrix");
    double d = 0.0;
    for (int j = 0; j < a.cols(); ++j) d += a(0, j);
    for (int i = 1; i < a.rows(); ++i) {
      double s = 0.0;
      for (int j = 0; j < a.cols(); ++j) s += a(i, j);
      if (std::abs(s - d) > 1e-9 * std::max(1.0, std::abs(d))) {
        throw quasi::ValidationError("--center needs equal row sums (row " + std::to_string(i) +
                                     " sums to " + Num(s) + ", row 0 to " + Num(d) + ")");
      }
    }
    degree = d;
    a = quasi::CenterRegular(a, d);
  }
  quasi::AnalyzeOptions opts;
  opts.bm.rank = g.rank;
  opts.bm.restarts = g.restarts;
  opts.bm.seed = g.seed;
  opts.exact_limit = g.exact_limit;
  opts.record_timings = timings;
  const quasi::NormReport report = quasi::AnalyzeMatrix(a, opts);
  Json doc;
  doc["kind"] = "norm_report";
  doc["input"] = path;
  if (degree) doc["centered_by_degree"] = *degree;
  if (input.contains("provenance")) doc["input_provenance"] = input["provenance"];
  const Json body = quasi::ReportToJson(report);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  bool all = report.checks.empty() || body["all_passed"].get<bool>();
  if (input.contains("certificate")) {
    // Eigen-certificate recomputed from the stored (uncentered) matrix.
    const quasi::Matrix raw = quasi::MatrixFromJson(input);
    const auto& cert = input["certificate"];
    const auto y = cert.at("eigenvector").get<std::vector<double>>();
    const double lambda = cert.at("eigenvalue").get<double>();
    if (static_cast<int>(y.size()) != raw.cols()) throw quasi::ParseError("certificate eigenvector has wrong length");
    const std::vector<double> ay = quasi::Apply(raw, y);
    double res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) res = std::max(res, std::abs(ay[i] - lambda * y[i]));
    const bool ok = res <= 1e-12;
    doc["certificate_check"] = {{"eigenvalue", lambda}, {"residual", res}, {"passed", ok}};
    all = all && ok;
  }
  doc["all_passed"] = all;
  Emit(g, doc);
  Say(g, "spectral " + Num(report.spectral) +
             (report.cut ? ", cut " + Num(report.cut->value) : std::string(", cut n/a")) +
             (report.infty_one ? ", infty->1 " + Num(report.infty_one->value) : std::string()) +
             ", G in [" + Num(report.groth_lower) + ", " + Num(report.groth_upper) + "]" +
             (report.transitive ? (*report.transitive ? ", transitive" : ", not transitive") : "") +
             (all ? "; all checks pass" : "; CHECK FAILURE"));
  return all ? kExitOk : kExitVerifyFailed;
}

int RunLift(const Globals& g, const std::string& path, const std::string& perms_path) {
  const quasi::Matrix a = quasi::MatrixFromJson(quasi::ReadJsonFile(path));
  quasi::PermGroup perms;
  if (!perms_path.empty()) {
    perms = quasi::PermGroupFromJson(quasi::ReadJsonFile(perms_path));
  } else {
    const auto cert = quasi::FindTransitiveAutomorphisms(a);
    if (!cert) throw quasi::ValidationError("matrix is not vertex-transitive; nothing to lift");
    if (!cert->subgroup) {
      throw quasi::CapacityError("the certificate automorphisms generate more than " +
                                 std::to_string(quasi::kDefaultClosureCap) +
                                 " elements; pass a smaller group with --perms");
    }
    perms = *cert->subgroup;
  }
  const quasi::LiftedFunction lifted = quasi::LiftToGroup(a, perms);
  Json doc;
  doc["kind"] = "lift";
  doc["input"] = path;
  doc["generators"] = quasi::PermGroupToJson(perms);
  Json elements = Json::array();
  for (const auto& p : perms.elements) elements.push_back(p.images());
  doc["elements"] = std::move(elements);
  doc["group"] = quasi::GroupToJson(*lifted.group);
  doc["function"] = lifted.f.values();
  const double n = a.rows();
  std::vector<quasi::Check> checks;
  checks.push_back(NearCheck("||f|| = ||A|| / n", quasi::GroupSpectral(lifted.f),
                             quasi::SpectralNorm(a) / n, 1e-9));
  bool consistent = true;
  for (std::size_t x = 0; x < perms.elements.size() && consistent; ++x)
    for (std::size_t y = 0; y < perms.elements.size() && consistent; ++y)
      consistent = lifted.f(lifted.group->mul(int(x), lifted.group->inv(int(y)))) ==
                   a(perms.elements[x](0), perms.elements[y](0));
  checks.push_back({"f(g h^-1) = a(g(0), h(0))", consistent ? 0.0 : 1.0, 0.0,
                    consistent ? 0.0 : -1.0, consistent});
  Say(g, "lifted to a group of order " + std::to_string(lifted.group->order()));
  return FinishChecks(g, doc, checks);
}

int RunFourier(const Globals& g, const std::string& family, const std::string& group_file,
               const std::string& irreps_path, const std::string& function_path) {
  const quasi::GroupPtr group = LoadGroup(family, group_file);
  const quasi::IrrepTable table = irreps_path.empty()
                                      ? quasi::BuildIrrepTable(group)
                                      : quasi::ParseIrreps(quasi::ReadJsonFile(irreps_path), group);
  std::optional<quasi::ComplexGroupFunction> f;
  if (!function_path.empty()) {
    f = quasi::ComplexGroupFunctionFromJson(quasi::ReadJsonFile(function_path), group);
  } else {
    quasi::CounterRng rng(g.seed, 0xF0);
    std::vector<quasi::Complex> v(group->order());
    for (auto& z : v) {
      const double re = rng.Normal();
      z = quasi::Complex(re, rng.Normal());
    }
    f.emplace(group, std::move(v));
  }
  const quasi::FourierCoefficients coeffs = quasi::FourierTransform(*f, table);
  Json doc;
  doc["kind"] = "fourier";
  doc["group"] = quasi::GroupToJson(*group);
  doc["function"] = quasi::ComplexGroupFunctionToJson(*f)["values"];
  Json cs = Json::array();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    cs.push_back({{"irrep", k}, {"dim", table.irreps[k].dim}, {"coefficient", CMatrixToJson(coeffs[k])}});
  doc["coefficients"] = std::move(cs);
  const double via = quasi::SpectralViaIrreps(*f, table);
  const double dense = quasi::GroupSpectral(*f);
  const quasi::SvdWitness w = quasi::MakeSvdWitness(*f, table);
  const double l2 = std::pow(quasi::FunctionNorm(*f, 2.0), 2);
  const double mass = quasi::PlancherelMass(coeffs, table);
  doc["spectral_via_irreps"] = via;
  doc["spectral_dense"] = dense;
  doc["svd_witness"] = {{"irrep", w.irrep},
                        {"norm", w.norm},
                        {"objective", Json::array({w.objective.real(), w.objective.imag()})}};
  doc["plancherel"] = {{"l2_squared", l2}, {"mass", mass}};
  std::vector<quasi::Check> checks;
  checks.push_back(NearCheck("Plancherel", mass, l2, 1e-10));
  checks.push_back(NearCheck("spectral via irreps = dense", via, dense, 1e-8));
  checks.push_back(NearCheck("SVD witness objective = ||f||", std::abs(w.objective), dense, 1e-8));
  const quasi::ComplexGroupFunction back = quasi::FourierInverse(coeffs, table);
  double err = 0.0;
  for (int x = 0; x < group->order(); ++x) err = std::max(err, std::abs(back(x) - (*f)(x)));
  checks.push_back({"inversion round trip", err, 1e-12, 1e-12 - err, err <= 1e-12});
  if (group->IsAbelian()) {
    const quasi::CharacterNorm cn = quasi::AbelianCharacterNorm(*f, table);
    doc["character_norm"] = {{"value", cn.value}, {"character", cn.character}};
    checks.push_back(NearCheck("character norm = ||f||", cn.value, dense, 1e-10));
  }
  Say(g, "||f|| = " + Num(dense) + " attained at irrep " + std::to_string(w.irrep));
  return FinishChecks(g, doc, checks);
}

int RunVerify(const Globals& g, const std::string& name, const std::string& data_dir) {
  std::vector<std::string> names;
  if (name == "all") {
    names = quasi::SuiteNames();
  } else {
    names.push_back(name);
  }
  quasi::SuiteOptions opts;
  opts.data_dir = data_dir;
  opts.seed = g.seed;
  Json summary = Json::array();
  bool all = true;
  for (const std::string& n : names) {
    const quasi::SuiteResult r = quasi::RunSuite(n, opts);
    all = all && r.passed();
    if (!g.quiet) {
      std::printf("%s %s: %s (worst relative margin %.3g)\n", r.passed() ? "PASS" : "FAIL",
                  r.name.c_str(), r.title.c_str(), r.worst_relative_margin());
      for (const auto& c : r.checks)
        std::printf("  %s %s: margin %.6g\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.margin);
      for (const auto& line : r.info) std::printf("  info %s\n", line.c_str());
    }
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin},
                        {"passed", c.passed}});
    summary.push_back({{"suite", r.name}, {"criterion", r.criterion}, {"passed", r.passed()},
                       {"checks", std::move(checks)}, {"info", r.info}});
  }
  if (!g.out.empty()) quasi::WriteJsonFile(g.out, {{"suites", summary}, {"all_passed", all}});
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasirandomness norms: cut, infty->1, spectral and Grothendieck"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for every randomized step");
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--rank", g.rank, "Burer-Monteiro rank (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--restarts", g.restarts, "Burer-Monteiro restarts")->check(CLI::PositiveNumber);
  app.add_option("--exact-cut-limit", g.exact_limit, "largest dimension for exact cut/infty->1")
      ->check(CLI::Range(1, quasi::kMaxExactLimit));
  app.add_flag("--quiet", g.quiet, "suppress summaries");

  int exit_code = kExitOk;
  auto* construct = app.add_subcommand("construct", "build a graph, group, Cayley matrix or irrep table");
  construct->require_subcommand(1);

  auto emit_graph = [&](const quasi::RegularGraph& graph, Json extra = Json::object()) {
    Json doc = GraphDoc(graph);
    for (const auto& [k, v] : extra.items()) doc[k] = v;
    CheckGraphRoundTrip(doc, graph);
    Emit(g, doc);
    Say(g, graph.provenance.family + ": " + std::to_string(graph.n) + " vertices, degree " +
               std::to_string(graph.degree));
  };

  int p = 0;
  auto* paley = construct->add_subcommand("paley", "Paley graph on Z_p, p = 1 mod 4");
  paley->add_option("p", p, "prime")->required();
  paley->callback([&] {
    const quasi::PaleyGraph pg = quasi::MakePaleyGraph(p);
    std::vector<int> set;
    for (int x = 0; x < p; ++x)
      if (pg.cayley.f(x) != 0.0) set.push_back(x);
    emit_graph(pg.graph, {{"cayley", {{"group", "cyclic:" + std::to_string(p)}, {"set", set}}}});
  });

  int cycle_n = 0;
  auto* cycle = construct->add_subcommand("cycle", "cycle C_n");
  cycle->add_option("n", cycle_n, "vertices")->required();
  cycle->callback([&] { emit_graph(quasi::MakeCycle(cycle_n)); });

  int complete_n = 0;
  auto* complete = construct->add_subcommand("complete", "complete graph K_n");
  complete->add_option("n", complete_n, "vertices")->required();
  complete->callback([&] { emit_graph(quasi::MakeComplete(complete_n)); });

  auto* petersen = construct->add_subcommand("petersen", "Petersen graph");
  petersen->callback([&] { emit_graph(quasi::MakePetersen()); });

  int ex_d = 0, ex_n = 0;
  auto* example1 = construct->add_subcommand("example1", "d-regular graph with eigenvalue -d/2");
  example1->add_option("--d", ex_d, "even degree")->required();
  example1->add_option("--n", ex_n, "vertices")->required();
  example1->callback([&] {
    const quasi::Example1Graph ex = quasi::MakeExample1(ex_d, ex_n, g.seed);
    Json cert = {{"eigenvalue", ex.eigenvalue}, {"eigenvector", ex.eigenvector},
                 {"residual", ex.residual},     {"U", ex.u},
                 {"V", ex.v},                   {"W1", ex.w1},
                 {"W0", ex.w0}};
    emit_graph(ex.graph, {{"certificate", cert}});
  });

  int rr_n = 0, rr_d = 0;
  auto* rr = construct->add_subcommand("random-regular", "seeded random d-regular graph");
  rr->add_option("--n", rr_n, "vertices")->required();
  rr->add_option("--d", rr_d, "degree")->required();
  rr->callback([&] { emit_graph(quasi::MakeRandomRegular(rr_n, rr_d, g.seed)); });

  std::string group_family;
  auto* group_cmd = construct->add_subcommand("group", "multiplication table of a named group");
  group_cmd->add_option("family", group_family, "e.g. dihedral:4 or product(cyclic:2,cyclic:2)")
      ->required();
  group_cmd->callback([&] {
    const quasi::GroupPtr grp = quasi::MakeGroup(quasi::FamilyFromString(group_family));
    Json doc = quasi::GroupToJson(*grp);
    if (!(*quasi::GroupFromJson(Json::parse(quasi::Render(doc))) == *grp)) {
      throw quasi::ValidationError("emitted group does not re-parse");
    }
    Emit(g, doc);
    Say(g, grp->label() + ": order " + std::to_string(grp->order()));
  });

  std::string cay_family, cay_set;
  auto* cayley = construct->add_subcommand("cayley", "Cayley graph Cay(G, S)");
  cayley->add_option("family", cay_family, "group family")->required();
  cayley->add_option("--set", cay_set, "comma-separated element indices")->required();
  cayley->callback([&] {
    const quasi::GroupPtr grp = quasi::MakeGroup(quasi::FamilyFromString(cay_family));
    const std::vector<int> set = ParseIntList(cay_set);
    const quasi::CayleyMatrix c = quasi::CayleyFromSet(grp, set);
    Json doc;
    doc["kind"] = c.symmetric ? "graph" : "matrix";
    const Json m = quasi::MatrixToJson(c.matrix);
    for (const auto& [k, v] : m.items()) doc[k] = v;
    doc["cayley"] = {{"group", cay_family}, {"set", set}, {"symmetric", c.symmetric}};
    quasi::Provenance prov{"cayley", {{"order", grp->order()}, {"set_size", static_cast<long long>(set.size())}}, 0};
    doc["provenance"] = quasi::ProvenanceToJson(prov);
    if (!(quasi::MatrixFromJson(Json::parse(quasi::Render(doc))) == c.matrix)) {
      throw quasi::ValidationError("emitted matrix does not re-parse");
    }
    Emit(g, doc);
    Say(g, "Cay(" + grp->label() + ", S) with |S| = " + std::to_string(set.size()));
  });

  std::string irrep_family;
  auto* irreps = construct->add_subcommand("irreps", "irrep table of a cyclic, dihedral or product group");
  irreps->add_option("family", irrep_family, "group family")->required();
  irreps->callback([&] {
    const quasi::GroupPtr grp = quasi::MakeGroup(quasi::FamilyFromString(irrep_family));
    const Json doc = quasi::IrrepsToJson(quasi::BuildIrrepTable(grp));
    quasi::ParseIrreps(Json::parse(quasi::Render(doc)), grp);
    Emit(g, doc);
  });

  std::string analyze_path;
  bool center = false, timings = false;
  auto* analyze = app.add_subcommand("analyze", "norm report for a matrix or graph file");
  analyze->add_option("file", analyze_path, "matrix, graph or edge-list JSON")->required();
  analyze->add_flag("--center", center, "subtract (d/n) J, d the common row sum");
  analyze->add_flag("--timings", timings, "record per-stage wall time");
  analyze->callback([&] { exit_code = RunAnalyze(g, analyze_path, center, timings); });

  std::string lift_path, perms_path;
  auto* lift = app.add_subcommand("lift", "lift a vertex-transitive matrix to a group function");
  lift->add_option("file", lift_path, "matrix JSON")->required();
  lift->add_option("--perms", perms_path, "permutation group {degree, generators}");
  lift->callback([&] { exit_code = RunLift(g, lift_path, perms_path); });

  std::string f_family, f_group_file, f_irreps, f_function;
  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients, norms and SVD witness");
  fourier->add_option("--group", f_family, "group family");
  fourier->add_option("--group-file", f_group_file, "group table JSON");
  fourier->add_option("--irreps", f_irreps, "irrep table JSON (required outside shipped families)");
  fourier->add_option("--function", f_function, "{values: [...]} (default: seeded random)");
  fourier->callback(
      [&] { exit_code = RunFourier(g, f_family, f_group_file, f_irreps, f_function); });

  std::string suite, data_dir = QUASI_DATA_DIR;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite ('all' for every suite)");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--data-dir", data_dir, "directory with s3_irreps.json");
  verify->callback([&] { exit_code = RunVerify(g, suite, data_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const quasi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quasi::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quasi::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
