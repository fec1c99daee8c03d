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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspic/af.hpp"
#include "aspic/saf.hpp"

namespace aspic::classical {

using PF = int;  // index into the PropPool

enum class Op { Atom, Not, And, Or, Implies };

struct PNode {
  Op op;
  int a = -1, b = -1;
  std::string atom;
};

/// Hash-consed propositional formulas over ¬ ∧ ∨ ⊃ (written - & | >).
class PropPool {
 public:
  PF atom(const std::string& name);
  PF mk_not(PF x);
  PF mk_and(PF a, PF b);
  PF mk_or(PF a, PF b);
  PF mk_implies(PF a, PF b);

  /// Designated contradictory: ¬φ with top-level double negation collapsed.
  PF neg(PF x);

  PF parse(const std::string& text);  // throws Error with position info
  std::string to_string(PF x) const;
  const PNode& node(PF x) const { return nodes_.at(x); }
  void collect_atoms(PF x, std::set<std::string>& out) const;

 private:
  PF put(PNode n);
  std::vector<PNode> nodes_;
  std::map<std::string, PF> index_;
};

constexpr int kAtomBudget = 20;

/// Exact classical entailment and consistency by exhaustive valuation.
/// Throws AtomBudget past 20 distinct atoms. This is the argumentation
/// path's backend; the preferred-subtheories oracle has its own evaluator.
bool entails(const PropPool& pool, const std::vector<PF>& s, PF phi);
bool consistent(const PropPool& pool, const std::vector<PF>& s);

/// Tarskian consequence-operator interface. Only the classical propositional
/// instance ships; other instantiations can plug in behind it.
class ConsequenceOperator {
 public:
  virtual ~ConsequenceOperator() = default;
  virtual bool entails(const std::vector<PF>& s, PF phi) const = 0;
  virtual bool consistent(const std::vector<PF>& s) const = 0;
};

class ClassicalConsequence : public ConsequenceOperator {
 public:
  explicit ClassicalConsequence(const PropPool& pool) : pool_(&pool) {}
  bool entails(const std::vector<PF>& s, PF phi) const override {
    return classical::entails(*pool_, s, phi);
  }
  bool consistent(const std::vector<PF>& s) const override {
    return classical::consistent(*pool_, s);
  }

 private:
  const PropPool* pool_;
};

/// Premise c-consistency oracle over the classical backend, for rule-based
/// theories whose formula displays parse as propositional formulas. Raises
/// OracleBudget when the valuation bound is exceeded.
CConsistencyOracle classical_c_oracle(PropPool& pool, const Language& lang);

/// Stratified default theory Γ1..Γn; strata are disjoint, stratum 1 is
/// strongest, and the induced preorder is α ≤' β iff stratum(α) ≥ stratum(β).
struct StratifiedTheory {
  std::vector<std::vector<PF>> strata;
  void validate(const PropPool& pool) const;  // disjointness
};

enum class AttackVariant {
  Undermine,       // Conc(A) ⊢ ¬φ for a premise φ of B (= direct defeat)
  DirectUndercut,  // Conc(A) ≡ ¬φ
  Syntactic        // Conc(A) = ¬φ up to double-negation collapse
};

struct ClassicalOptions {
  OrderingSpec ordering = {LinkPrinciple::WeakestLink, SetComparison::Elitist};
  AttackVariant variant = AttackVariant::Undermine;
  bool premise_minimal = true;  // drop non-minimal supports
  size_t max_support_subsets = 1u << 16;
};

/// The classical c-SAF: arguments are consistent supports X ⊆ Σ with X ⊨ p
/// for p in the claims universe (premise-minimal by default), realized as
/// two-level trees over materialized strict rule instances; attacks are
/// premise-directed per the chosen variant; defeats follow the ordering over
/// premise sets.
struct ClassicalFrame {
  std::shared_ptr<Theory> theory;
  PropPool pool;
  StructuredAF saf;
  std::map<PF, FormulaId> formula_of;
  std::vector<PF> sigma;
  std::vector<PF> claims;

  std::optional<ArgId> find_argument(const std::vector<PF>& support, PF claim) const;
};

/// Explicit preorder pairs a ≤' b over Σ.
using PremisePrefs = std::vector<std::pair<PF, PF>>;

ClassicalFrame build_classical_csaf(PropPool pool, const std::vector<PF>& sigma,
                                    const PremisePrefs& prefs, const std::vector<PF>& user_claims,
                                    const ClassicalOptions& opts = {});

ClassicalFrame build_classical_csaf(PropPool pool, const StratifiedTheory& strata,
                                    const std::vector<PF>& user_claims,
                                    const ClassicalOptions& opts = {});

/// Default claims universe: every σ ∈ Σ, its designated negation, and the
/// user claims. Throws ClaimsEmpty when the result is empty.
std::vector<PF> default_claims(PropPool& pool, const std::vector<PF>& sigma,
                               const std::vector<PF>& user_claims);

struct CorrespondenceResult {
  bool ok = true;
  std::string witness;
  size_t stable_count = 0;
  size_t subtheory_count = 0;
};

/// Checks both directions of the stable-extension / preferred-subtheory
/// correspondence for a stratified theory against the independent
/// subset-enumeration oracle ps::preferred_subtheories.
CorrespondenceResult verify_ps_correspondence(const PropPool& pool, const StratifiedTheory& strata,
                                              const std::vector<PF>& user_claims = {},
                                              LinkPrinciple link = LinkPrinciple::WeakestLink);

struct EquivalenceResult {
  bool applicable = true;  // ordering satisfies the no-strengthening condition
  bool equal = true;
  std::string detail;
};

/// Conclusion sets of T-extensions agree between the full and the
/// premise-minimal classical frame. Requires the Elitist comparison
/// (no-strengthening); reports skipped otherwise.
EquivalenceResult premise_minimal_equivalence_check(const PropPool& pool,
                                                    const std::vector<PF>& sigma,
                                                    const PremisePrefs& prefs,
                                                    const std::vector<PF>& user_claims,
                                                    const ClassicalOptions& opts,
                                                    Semantics semantics);

/// Parses the stratified theory file format:
///   stratum 1: x. stratum 2: -y; x > y.
/// `#` starts a comment; formulas use & | > - and parentheses.
struct StratifiedParse {
  PropPool pool;
  StratifiedTheory strata;
};
StratifiedParse parse_stratified(const std::string& text);

}  // namespace aspic::classical

namespace aspic::ps {

/// Independent preferred-subtheories oracle: stratum-wise maximal consistent
/// subsets found by brute-force subset enumeration. Deliberately shares no
/// code with the argumentation path (separate consistency evaluator).
std::vector<std::vector<classical::PF>> preferred_subtheories(
    const classical::PropPool& pool, const classical::StratifiedTheory& strata);

/// The oracle's own consistency check (bitset truth tables), exposed for
/// cross-validation tests.
bool oracle_consistent(const classical::PropPool& pool, const std::vector<classical::PF>& s);

}  // namespace aspic::ps
