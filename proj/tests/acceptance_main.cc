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

// Runs every acceptance suite and prints one pass/fail line per criterion.
// Pass --verbose to list individual checks.

#include <cstdio>
#include <cstring>
#include <exception>

#include "quasi/suites.h"

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
  quasi::SuiteOptions opts;
  opts.data_dir = QUASI_DATA_DIR;
  int failures = 0;
  for (const std::string& name : quasi::SuiteNames()) {
    try {
      const quasi::SuiteResult r = quasi::RunSuite(name, opts);
      const bool ok = r.passed();
      failures += ok ? 0 : 1;
      std::printf("%s criterion %d %s: %s (%zu checks, worst relative margin %.3g, %.2f s)\n",
                  ok ? "PASS" : "FAIL", r.criterion, r.name.c_str(), r.title.c_str(),
                  r.checks.size(), r.worst_relative_margin(), r.seconds);
      for (const quasi::SuiteCheck& c : r.checks) {
        if (verbose || !c.passed) {
          std::printf("    %s %s: lhs %.17g rhs %.17g margin %.3g\n", c.passed ? "ok  " : "FAIL",
                      c.name.c_str(), c.lhs, c.rhs, c.margin);
        }
      }
      for (const std::string& line : r.info) std::printf("    info %s\n", line.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %s: exception: %s\n", name.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures,
              quasi::SuiteNames().size());
  return failures ? 1 : 0;
}
