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

#ifndef QUASI_SUITES_H_
#define QUASI_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace quasi {

struct SuiteCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs; negative means violated
  bool passed = false;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;   // e.g. "sandwich-suite"
  std::string title;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> info;  // informational lines, never asserted
  double seconds = 0.0;

  bool passed() const;
  // Worst margin over checks, relative to max(1, |rhs|).
  double worst_relative_margin() const;
};

struct SuiteOptions {
  std::string data_dir;  // directory holding s3_irreps.json
  std::uint64_t seed = 0;
};

// Names in criterion order.
std::vector<std::string> SuiteNames();

// Throws ValidationError for unknown names.
SuiteResult RunSuite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace quasi

#endif  // QUASI_SUITES_H_
