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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspic/formula.hpp"
#include "aspic/preorder.hpp"
#include "aspic/util.hpp"

namespace aspic {

enum class RuleKind { Strict, Defeasible };

/// An inference rule. Antecedents keep their declared order (argument
/// construction matches children positionally); identity is the antecedent
/// multiset plus consequent plus kind.
struct Rule {
  RuleKind kind;
  std::vector<FormulaId> antecedents;
  FormulaId consequent;
  std::optional<FormulaId> name;  // defeasible rules only

  bool strict() const { return kind == RuleKind::Strict; }
};

struct KnowledgeBase {
  std::vector<FormulaId> axioms;    // K_n, sorted
  std::vector<FormulaId> ordinary;  // K_p, sorted

  bool is_axiom(FormulaId f) const { return sorted_contains(axioms, f); }
  bool is_ordinary(FormulaId f) const { return sorted_contains(ordinary, f); }
  std::vector<FormulaId> all() const { return sorted_union(axioms, ordinary); }
};

enum class FrameworkMode { Saf, CSaf };

/// An argumentation theory: language + contrariness + rules + naming + the
/// knowledge base, plus the two preorders feeding argument orderings.
/// Immutable once finalize() has run.
class Theory {
 public:
  Language lang;
  Contrariness con;
  KnowledgeBase kb;
  Preorder rule_preorder;     // over defeasible RuleIds
  Preorder premise_preorder;  // over K_p FormulaIds

  FormulaId intern(const std::string& literal) { return lang.intern_literal(literal); }
  FormulaId intern_opaque(const std::string& display) { return lang.intern_opaque(display); }

  void add_axiom(FormulaId f);
  void add_premise(FormulaId f, std::optional<int> rank = std::nullopt);
  RuleId add_strict(std::vector<FormulaId> antecedents, FormulaId consequent);
  RuleId add_defeasible(std::vector<FormulaId> antecedents, FormulaId consequent, FormulaId name);
  void declare_contrary(FormulaId phi, FormulaId of_psi);  // φ ∈ ψ⁻
  void add_rule_pref(FormulaId name_a, FormulaId name_b);  // rule(a) ≤ rule(b)
  void add_premise_pref(FormulaId a, FormulaId b);         // a ≤' b

  // Installs default contrariness for the literal language (strong-literal
  // contradictory pairs, weak literals get their strong core as a contrary),
  // folds ranks into the premise preorder, closes both preorders and checks
  // structural invariants. Throws IllFormedTheory.
  void finalize();
  bool finalized() const { return finalized_; }

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(RuleId r) const { return rules_.at(r); }
  std::vector<RuleId> strict_rule_ids() const;
  std::vector<RuleId> defeasible_rule_ids() const;
  std::optional<RuleId> rule_by_name(FormulaId name) const;
  const std::map<FormulaId, int>& premise_ranks() const { return ranks_; }
  bool user_declared_contrary() const { return user_contrary_; }
  const std::vector<std::pair<FormulaId, FormulaId>>& user_contraries() const {
    return user_contraries_;
  }

  // Cl_Rs(S): least set containing S closed under the strict rules.
  std::vector<FormulaId> closure_under_strict(const std::vector<FormulaId>& s) const;
  bool is_directly_consistent(const std::vector<FormulaId>& s) const;
  bool is_indirectly_consistent(const std::vector<FormulaId>& s) const;

  // S ⊢ φ via strict rules only, and the derived c-consistency notion
  // (no φ with S ⊢ φ and S ⊢ −φ for contradictories φ, −φ).
  bool strictly_derives(const std::vector<FormulaId>& s, FormulaId phi) const;
  bool is_c_consistent_set(const std::vector<FormulaId>& s) const;

  // A copy of this theory whose strict rules are closed under transposition.
  // Throws MissingContradictory when a strict rule mentions a formula with no
  // designated contradictory.
  Theory transposed() const;

 private:
  friend std::vector<Rule> transpose_rules(const std::vector<Rule>&, Language&, Contrariness&);
  RuleId add_rule(Rule r);
  std::string rule_key(const Rule& r) const;

  std::vector<Rule> rules_;
  std::map<std::string, RuleId> rule_index_;  // multiset identity
  std::map<FormulaId, RuleId> name_index_;
  std::map<FormulaId, int> ranks_;
  std::vector<std::pair<FormulaId, FormulaId>> user_contraries_;
  bool user_contrary_ = false;
  bool finalized_ = false;
};

/// Closure of a strict rule set under transposition (idempotent). New
/// formulas (flipped literals) are interned into `lang` and paired in `con`.
std::vector<Rule> transpose_rules(const std::vector<Rule>& rules, Language& lang,
                                  Contrariness& con);

struct WellDefinedWitness {
  std::string what;
};

/// Report of the framework preconditions. The syntactic checks are exact; the
/// contraposition and c-classicality checks are sampled over bounded
/// derivations and subsets, and are reported as such.
struct WellDefinedReport {
  bool axiom_consistent = true;
  bool well_formed = true;
  bool transposition_closed = true;
  bool contraposition_sampled = true;  // no failed sample
  bool c_classical_sampled = true;     // c-SAF mode only
  size_t contraposition_samples = 0;
  size_t c_classical_samples = 0;
  std::vector<WellDefinedWitness> axiom_witnesses;
  std::vector<WellDefinedWitness> well_formed_witnesses;
  std::vector<WellDefinedWitness> transposition_witnesses;
  std::vector<WellDefinedWitness> contraposition_witnesses;
  std::vector<WellDefinedWitness> c_classical_witnesses;
  // Flags, not failures: formulas with no contradictory, self-incompatible
  // formulas the user declared.
  std::vector<std::string> missing_contradictory;
  std::vector<std::string> self_incompatible;

  bool syntactically_well_defined() const {
    return axiom_consistent && well_formed && transposition_closed;
  }
};

WellDefinedReport check_well_defined(const Theory& t, FrameworkMode mode,
                                     uint64_t seed = 1);

}  // namespace aspic
