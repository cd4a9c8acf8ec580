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

#ifndef QUASI_ERRORS_H_
#define QUASI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace quasi {

// A computation would exceed one of the desk-scale caps (table size,
// enumeration width, closure size, search degree).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural requirement (group axioms, automorphism,
// regularity, shape).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasi

#endif  // QUASI_ERRORS_H_
