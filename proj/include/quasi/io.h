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

#ifndef QUASI_IO_H_
#define QUASI_IO_H_

#include <string>

#include "json.hpp"
#include "quasi/constructions.h"
#include "quasi/fourier.h"
#include "quasi/group.h"
#include "quasi/matrix.h"
#include "quasi/norms.h"

namespace quasi {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// {label, order, mul (row-major), inv[, family]}
Json GroupToJson(const GroupTable& g);
// Throws ParseError on malformed documents and ValidationError when the
// table is not a group.
GroupPtr GroupFromJson(const Json& j);

std::string FamilyToString(const GroupFamily& f);
GroupFamily FamilyFromString(const std::string& s);
// "cyclic:12", "dihedral:4", "symmetric:3", "product(cyclic:2,cyclic:2)".
GroupPtr MakeGroup(const GroupFamily& f);

// {degree, generators}
Json PermGroupToJson(const PermGroup& g);
PermGroup PermGroupFromJson(const Json& j, std::size_t cap = kDefaultClosureCap);

// {rows, cols, entries (row-major)}
Json MatrixToJson(const Matrix& a);
// Accepts the matrix form or an edge list {n, edges: [[s, t], ...]}.
Matrix MatrixFromJson(const Json& j);

Json ProvenanceToJson(const Provenance& p);

// {group, irreps: [{dim, matrices: [per element: row-major [re, im] pairs]}]}
Json IrrepsToJson(const IrrepTable& t);
// Binds the parsed matrices to `group` and validates; throws
// ValidationError listing the first diagnostics when invalid.
IrrepTable ParseIrreps(const Json& j, GroupPtr group);

Json GroupFunctionToJson(const GroupFunction& f);
Json ComplexGroupFunctionToJson(const ComplexGroupFunction& f);
ComplexGroupFunction ComplexGroupFunctionFromJson(const Json& j, GroupPtr group);

Json ReportToJson(const NormReport& r);

Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);
// Stable rendering used for every emitted file.
std::string Render(const Json& j);

}  // namespace quasi

#endif  // QUASI_IO_H_
