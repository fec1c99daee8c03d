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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspic/theory.hpp"
#include "aspic/util.hpp"

namespace aspic {

/// Construction bounds. Rule sets with cyclic dependencies admit infinitely
/// many finite arguments; these limits make construction total. With
/// distinct_conclusions_per_path on and an acyclic rule graph the built set
/// is the full argument set.
struct BuildLimits {
  int max_depth = 32;
  bool distinct_conclusions_per_path = true;
  size_t max_arguments = 100000;

  void validate() const {
    if (max_depth <= 0 || max_arguments == 0)
      throw Error("build limits must be positive");
  }
};

/// One argument: either a knowledge-base premise or a rule application whose
/// children conclude the rule's antecedents in order. All accessors
/// are cached at construction. Nodes live in an ArgumentSet pool and are
/// deduplicated structurally; `id` is a stable hash of the canonical tree
/// serialization.
struct Argument {
  std::optional<RuleId> rule;   // nullopt: premise
  FormulaId conc;
  std::vector<ArgId> children;  // in antecedent order

  std::vector<FormulaId> prem, prem_n, prem_p;
  std::vector<ArgId> sub;        // sorted, includes self
  std::vector<RuleId> rules, def_rules, strict_rules, last_def_rules;
  std::vector<FormulaId> all_concs;  // conclusions of every node in the tree
  int depth = 1;
  std::string id;

  bool is_premise() const { return !rule.has_value(); }
  bool strict() const { return def_rules.empty(); }
  bool defeasible() const { return !strict(); }
  bool firm() const { return prem_p.empty(); }
  bool plausible() const { return !firm(); }
  bool fallible() const { return plausible() || defeasible(); }
};

class ArgumentSet {
 public:
  ArgumentSet() = default;
  explicit ArgumentSet(const Theory* theory) : theory_(theory) {}

  ArgId add_premise(FormulaId f);
  ArgId add_rule_app(RuleId r, const std::vector<ArgId>& children);
  std::optional<ArgId> find_rule_app(RuleId r, const std::vector<ArgId>& children) const;

  const Argument& arg(ArgId a) const { return nodes_.at(a); }
  size_t size() const { return nodes_.size(); }
  const Theory& theory() const { return *theory_; }

  // Args that contain `a` as a (not necessarily proper) sub-argument.
  std::vector<ArgId> containers_of(ArgId a) const;

  // Human-readable nested rendering, e.g. [[~s]=>t].
  std::string describe(ArgId a) const;

 private:
  const Theory* theory_ = nullptr;
  std::vector<Argument> nodes_;
  std::map<std::string, ArgId> dedup_;
};

struct BuildResult {
  ArgumentSet args;
  std::vector<ArgId> universe;  // all built arguments, pool order
  // True when no construction was pruned by the path-repetition rule or the
  // depth bound, i.e. the set is exactly the theory's full argument set.
  bool exact_universe = true;
  size_t pruned_by_path = 0;
  size_t pruned_by_depth = 0;
};

/// All finite arguments of the theory under the limits, deduplicated
/// structurally. Throws BudgetExceeded when max_arguments is hit.
BuildResult build_arguments(const Theory& t, const BuildLimits& limits = {});

/// M(A): the ⊆-maximal sub-arguments of A that end with a defeasible rule or
/// are an ordinary premise.
std::vector<ArgId> max_fallible_subargs(const ArgumentSet& set, ArgId a);

/// Strict continuation: ordinary premises and defeasible rules of `a` equal
/// the unions over `parts`; strict rules and axiom premises are supersets.
bool is_strict_continuation(const ArgumentSet& set, ArgId a, const std::vector<ArgId>& parts);

/// Premise c-consistency oracle: given a premise set, decide whether no
/// formula and its contradictory are both derivable. May throw OracleBudget.
using CConsistencyOracle = std::function<bool(const std::vector<FormulaId>&)>;

/// Oracle backed by the theory's strict rules (S ⊢ φ as strict-argument
/// existence, i.e. closure membership).
CConsistencyOracle rule_based_oracle(const Theory& t);

bool is_c_consistent(const ArgumentSet& set, ArgId a, const CConsistencyOracle& oracle);

/// Keeps A iff no other argument in `args` has the same conclusion and a
/// strictly smaller premise set.
std::vector<ArgId> premise_minimal_filter(const ArgumentSet& set, const std::vector<ArgId>& args);

}  // namespace aspic
