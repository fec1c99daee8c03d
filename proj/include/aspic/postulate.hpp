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

#include <string>
#include <vector>

#include "aspic/af.hpp"
#include "aspic/saf.hpp"

namespace aspic {

/// Result of the four rationality checks on one extension. Witnesses are
/// nonempty exactly when the corresponding flag is false. Conclusions that
/// the strict closure demands but no argument in the built universe can
/// supply are budget gaps, not violations.
struct PostulateResult {
  std::vector<ArgId> extension;
  bool subarg_closure = true;
  bool strict_closure = true;
  bool direct_consistency = true;
  bool indirect_consistency = true;
  std::vector<std::string> subarg_witnesses;
  std::vector<std::string> strict_closure_witnesses;
  std::vector<std::string> direct_witnesses;
  std::vector<std::string> indirect_witnesses;
  std::vector<std::string> closure_budget_gaps;

  bool all_ok() const {
    return subarg_closure && strict_closure && direct_consistency && indirect_consistency;
  }
};

bool check_subarg_closure(const ArgumentSet& set, const std::vector<ArgId>& extension,
                          std::vector<std::string>* witnesses = nullptr);

bool check_strict_closure(const ArgumentSet& set, const std::vector<ArgId>& universe,
                          const std::vector<ArgId>& extension,
                          std::vector<std::string>* witnesses = nullptr,
                          std::vector<std::string>* budget_gaps = nullptr);

bool check_direct_consistency(const ArgumentSet& set, const std::vector<ArgId>& extension,
                              std::vector<std::string>* witnesses = nullptr);

bool check_indirect_consistency(const ArgumentSet& set, const std::vector<ArgId>& extension,
                                std::vector<std::string>* witnesses = nullptr);

PostulateResult check_postulates(const StructuredAF& saf, const std::vector<ArgId>& extension);

/// Runs the four checks on every extension of the chosen semantics.
struct PostulateReport {
  Semantics semantics;
  CfMode cf_mode;
  std::vector<PostulateResult> per_extension;
  bool all_ok() const {
    for (const auto& r : per_extension)
      if (!r.all_ok()) return false;
    return true;
  }
};

PostulateReport check_postulates_all(const StructuredAF& saf, Semantics semantics, CfMode cf_mode,
                                     const SolveBudget& budget = {});

}  // namespace aspic
