/*  Copyright 2026 The aspic authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

#pragma once

#include <stdexcept>
#include <string>

namespace aspic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when argument construction or extension enumeration hits a bound.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A formula needed as a designated contradictory does not have one.
struct MissingContradictory : Error {
  using Error::Error;
};

// A set comparison was asked about an element outside the preorder.
struct UnknownElement : Error {
  using Error::Error;
};

// Structural invariant of a theory is violated (distinct from syntax errors).
struct IllFormedTheory : Error {
  using Error::Error;
};

struct AtomBudget : Error {
  using Error::Error;
};

struct ClaimsEmpty : Error {
  using Error::Error;
};

struct OracleBudget : Error {
  using Error::Error;
};

}  // namespace aspic
