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

#include <memory>
#include <string>
#include <vector>

#include "aspic/theory.hpp"

namespace aspic {

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  std::string expected;  // comma-separated expected tokens, may be empty

  std::string render() const;
};

/// One declaration per line, `#` comments:
///   axiom: <formula>.
///   premise: <formula> [rank <int>].
///   strict: f1, ..., fn -> f.
///   defeasible <name>: f1, ..., fn => f.
///   contrary: <f> of <g>.
///   rulepref: <name> < <name>.      (name ≤ name)
///   prempref: <formula> < <formula>.
/// Formulas are literals: atom | -atom | ~atom | ~-atom.
struct ParseResult {
  std::shared_ptr<Theory> theory;        // null on syntax errors
  std::vector<Diagnostic> syntax_errors;  // exit code 2
  std::vector<Diagnostic> semantic_errors;  // ill-formed theory, exit code 3
  std::vector<std::string> warnings;

  bool ok() const { return syntax_errors.empty() && semantic_errors.empty(); }
};

ParseResult parse_theory(const std::string& text);

/// Canonical DSL rendering; parse ∘ print ∘ parse is a fixpoint.
std::string print_theory(const Theory& t);

}  // namespace aspic
