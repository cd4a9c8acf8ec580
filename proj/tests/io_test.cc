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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <limits>

#include "quasi/cayley.h"
#include "quasi/constructions.h"
#include "quasi/errors.h"
#include "quasi/fourier.h"
#include "quasi/norms.h"
#include "quasi/rng.h"

namespace quasi {
namespace {

TEST(GroupJson, DihedralRoundTripIsByteEqual) {
  const GroupPtr d4 = Dihedral(4);
  const std::string once = Render(GroupToJson(*d4));
  const GroupPtr back = GroupFromJson(Json::parse(once));
  EXPECT_TRUE(*back == *d4);
  EXPECT_EQ(Render(GroupToJson(*back)), once);
}

TEST(GroupJson, AllShippedFamiliesRoundTrip) {
  for (const GroupPtr& g : {Cyclic(1), Cyclic(7), Dihedral(1), Dihedral(5), Symmetric(4),
                            Product(*Cyclic(2), *Dihedral(3))}) {
    const GroupPtr back = GroupFromJson(GroupToJson(*g));
    EXPECT_TRUE(*back == *g) << g->label();
  }
}

TEST(GroupJson, Errors) {
  Json j = GroupToJson(*Cyclic(3));
  Json missing = j;
  missing.erase("mul");
  EXPECT_THROW(GroupFromJson(missing), ParseError);
  Json wrong_size = j;
  wrong_size["mul"].erase(wrong_size["mul"].size() - 1);
  EXPECT_THROW(GroupFromJson(wrong_size), ParseError);
  Json bad_inv = j;
  bad_inv["inv"] = {0, 1, 2};
  EXPECT_ANY_THROW(GroupFromJson(bad_inv));
  // Latin square that is not associative.
  Json latin;
  latin["label"] = "latin";
  latin["order"] = 5;
  latin["mul"] = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  latin["inv"] = {0, 1, 2, 3, 4};
  EXPECT_THROW(GroupFromJson(latin), ValidationError);
  EXPECT_THROW(GroupFromJson(Json::array()), ParseError);
}

TEST(FamilyString, RoundTrip) {
  for (const std::string s : {"cyclic:12", "dihedral:4", "symmetric:3", "product(cyclic:2,cyclic:2)",
                              "product(dihedral:3,product(cyclic:2,cyclic:3))"}) {
    EXPECT_EQ(FamilyToString(FamilyFromString(s)), s);
  }
  EXPECT_EQ(MakeGroup(FamilyFromString("product(cyclic:2,cyclic:2)"))->order(), 4);
  EXPECT_EQ(MakeGroup(FamilyFromString("symmetric:4"))->order(), 24);
  for (const std::string s : {"", "cyclic", "cyclic:", "cyclic:x", "torus:3", "product(cyclic:2)",
                              "product(cyclic:2,cyclic:2", "cyclic:3junk"}) {
    EXPECT_ANY_THROW(MakeGroup(FamilyFromString(s))) << s;
  }
}

TEST(PermGroupJson, RoundTrip) {
  const PermGroup g = GroupClosure(4, {Permutation({1, 2, 3, 0})});
  const PermGroup back = PermGroupFromJson(PermGroupToJson(g));
  EXPECT_EQ(back.degree, 4);
  EXPECT_EQ(back.elements, g.elements);
}

TEST(MatrixJson, MatrixForm) {
  const Json j = Json::parse(R"({"rows": 2, "cols": 3, "entries": [1, -1, 0.5, 0, 2, 3]})");
  const Matrix a = MatrixFromJson(j);
  EXPECT_EQ(a.rows(), 2);
  EXPECT_EQ(a.cols(), 3);
  EXPECT_EQ(a(0, 2), 0.5);
  EXPECT_EQ(a(1, 2), 3.0);
  EXPECT_EQ(Render(MatrixToJson(a)), Render(MatrixToJson(MatrixFromJson(MatrixToJson(a)))));
}

TEST(MatrixJson, EdgeListForm) {
  const Matrix a = MatrixFromJson(Json::parse(R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})"));
  const Matrix c = MakeCycle(4).adjacency;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(a(i, j), c(i, j));
}

TEST(MatrixJson, Errors) {
  EXPECT_THROW(MatrixFromJson(Json::parse(R"({"rows": 2, "cols": 2, "entries": [1, 2, 3]})")), ParseError);
  EXPECT_THROW(MatrixFromJson(Json::parse(R"({"rows": 2, "entries": [1, 2, 3, 4]})")), ParseError);
  EXPECT_THROW(MatrixFromJson(Json::parse(R"({"rows": 1, "cols": 2, "entries": [1, "x"]})")), ParseError);
  EXPECT_THROW(MatrixFromJson(Json::parse(R"({"n": 3, "edges": [[0, 5]]})")), ValidationError);
  EXPECT_THROW(MatrixFromJson(Json::parse(R"({"n": 3, "edges": [[0]]})")), ParseError);
  Json nonfinite;
  nonfinite["rows"] = 1;
  nonfinite["cols"] = 1;
  nonfinite["entries"] = {std::numeric_limits<double>::infinity()};
  EXPECT_ANY_THROW(MatrixFromJson(nonfinite));
  EXPECT_THROW(MatrixFromJson(Json::parse("[1, 2]")), ParseError);
}

TEST(IrrepJson, RoundTrip) {
  const IrrepTable t = BuildIrrepTable(Dihedral(4));
  const std::string text = Render(IrrepsToJson(t));
  const IrrepTable back = ParseIrreps(Json::parse(text), Dihedral(4));
  ASSERT_EQ(back.irreps.size(), t.irreps.size());
  for (std::size_t k = 0; k < t.irreps.size(); ++k)
    for (int x = 0; x < 8; ++x)
      for (int i = 0; i < t.irreps[k].dim; ++i)
        for (int j = 0; j < t.irreps[k].dim; ++j)
          EXPECT_EQ(back.irreps[k].matrices[x](i, j), t.irreps[k].matrices[x](i, j));
  EXPECT_EQ(Render(IrrepsToJson(back)), text);
}

TEST(IrrepJson, InvalidTableIsRejected) {
  Json j = IrrepsToJson(BuildIrrepTable(Cyclic(4)));
  j["irreps"].erase(3);
  try {
    ParseIrreps(j, Cyclic(4));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("incomplete"), std::string::npos);
  }
  EXPECT_ANY_THROW(ParseIrreps(Json::parse(R"({"irreps": [{"dim": 1}]})"), Cyclic(4)));
}

TEST(FunctionJson, ComplexRoundTrip) {
  const GroupPtr g = Cyclic(3);
  const ComplexGroupFunction f(g, std::vector<Complex>{{1, 2}, {0, -1}, {3, 0}});
  const ComplexGroupFunction back = ComplexGroupFunctionFromJson(ComplexGroupFunctionToJson(f), g);
  for (int x = 0; x < 3; ++x) EXPECT_EQ(back(x), f(x));
  // Plain numbers are real values.
  const auto real = ComplexGroupFunctionFromJson(Json::parse(R"({"values": [1, 2, 3]})"), g);
  EXPECT_EQ(real(2), Complex(3.0));
  EXPECT_ANY_THROW(ComplexGroupFunctionFromJson(Json::parse(R"({"values": [1, 2]})"), g));
  EXPECT_THROW(ComplexGroupFunctionFromJson(Json::parse(R"({"vals": []})"), g), ParseError);
}

TEST(ReportJson, DeterministicAndComplete) {
  const Matrix a = MakePaleyGraph(13).graph.adjacency;
  AnalyzeOptions opts;
  opts.bm.seed = 5;
  const std::string one = Render(ReportToJson(AnalyzeMatrix(a, opts)));
  const std::string two = Render(ReportToJson(AnalyzeMatrix(a, opts)));
  EXPECT_EQ(one, two);
  const Json j = Json::parse(one);
  for (const char* key : {"rows", "cols", "spectral", "cut", "infty_one", "grothendieck", "transitivity",
                          "checks", "all_passed", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_TRUE(j["transitivity"]["transitive"].get<bool>());
  EXPECT_NEAR(j["spectral"].get<double>(), 6.0, 1e-12);
}

TEST(ReportJson, CutAbsentAboveLimit) {
  AnalyzeOptions opts;
  opts.exact_limit = 4;
  const Json j = ReportToJson(AnalyzeMatrix(MakeCycle(6).adjacency, opts));
  EXPECT_TRUE(j["cut"].is_null());
  EXPECT_TRUE(j["infty_one"].is_null());
  EXPECT_FALSE(j["notes"].empty());
}

TEST(Files, WriteReadRoundTrip) {
  const std::string path = ::testing::TempDir() + "quasi_io_test.json";
  const Json j = GroupToJson(*Dihedral(3));
  WriteJsonFile(path, j);
  EXPECT_EQ(Render(ReadJsonFile(path)), Render(j));
  std::remove(path.c_str());
  EXPECT_THROW(ReadJsonFile(path), ParseError);
  const std::string bad = ::testing::TempDir() + "quasi_io_bad.json";
  {
    std::FILE* f = std::fopen(bad.c_str(), "w");
    std::fputs("{not json", f);
    std::fclose(f);
  }
  EXPECT_THROW(ReadJsonFile(bad), ParseError);
  std::remove(bad.c_str());
}

}  // namespace
}  // namespace quasi
