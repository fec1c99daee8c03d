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

#include "aspic/theory.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace aspic {

void Theory::add_axiom(FormulaId f) { sorted_insert(kb.axioms, f); }

void Theory::add_premise(FormulaId f, std::optional<int> rank) {
  sorted_insert(kb.ordinary, f);
  if (rank) ranks_[f] = *rank;
}

std::string Theory::rule_key(const Rule& r) const {
  std::vector<FormulaId> ante = r.antecedents;
  std::sort(ante.begin(), ante.end());
  std::string key = r.strict() ? "s|" : "d|";
  for (FormulaId a : ante) key += std::to_string(a) + ",";
  key += "->" + std::to_string(r.consequent);
  return key;
}

RuleId Theory::add_rule(Rule r) {
  std::string key = rule_key(r);
  auto it = rule_index_.find(key);
  if (it != rule_index_.end()) return it->second;
  RuleId id = static_cast<RuleId>(rules_.size());
  rule_index_.emplace(std::move(key), id);
  if (r.name) name_index_.emplace(*r.name, id);
  rules_.push_back(std::move(r));
  return id;
}

RuleId Theory::add_strict(std::vector<FormulaId> antecedents, FormulaId consequent) {
  return add_rule(Rule{RuleKind::Strict, std::move(antecedents), consequent, std::nullopt});
}

RuleId Theory::add_defeasible(std::vector<FormulaId> antecedents, FormulaId consequent,
                              FormulaId name) {
  if (name_index_.count(name)) {
    // Same structure under the same name is a benign re-declaration.
    Rule probe{RuleKind::Defeasible, antecedents, consequent, name};
    auto it = rule_index_.find(rule_key(probe));
    if (it != rule_index_.end() && rules_[it->second].name == name) return it->second;
    throw IllFormedTheory("defeasible rule name '" + lang.display(name) + "' is not unique");
  }
  return add_rule(Rule{RuleKind::Defeasible, std::move(antecedents), consequent, name});
}

void Theory::declare_contrary(FormulaId phi, FormulaId of_psi) {
  con.declare(phi, of_psi);
  user_contrary_ = true;
  user_contraries_.emplace_back(phi, of_psi);
}

void Theory::add_rule_pref(FormulaId name_a, FormulaId name_b) {
  auto a = rule_by_name(name_a), b = rule_by_name(name_b);
  if (!a || !b) throw IllFormedTheory("rulepref names an unknown defeasible rule");
  rule_preorder.add_leq(*a, *b);
}

void Theory::add_premise_pref(FormulaId a, FormulaId b) {
  if (!kb.is_ordinary(a) || !kb.is_ordinary(b))
    throw IllFormedTheory("prempref refers to a formula that is not an ordinary premise");
  premise_preorder.add_leq(a, b);
}

std::optional<RuleId> Theory::rule_by_name(FormulaId name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<RuleId> Theory::strict_rule_ids() const {
  std::vector<RuleId> out;
  for (RuleId i = 0; i < rules_.size(); ++i)
    if (rules_[i].strict()) out.push_back(i);
  return out;
}

std::vector<RuleId> Theory::defeasible_rule_ids() const {
  std::vector<RuleId> out;
  for (RuleId i = 0; i < rules_.size(); ++i)
    if (!rules_[i].strict()) out.push_back(i);
  return out;
}

void Theory::finalize() {
  // K_n and K_p must be disjoint.
  for (FormulaId f : kb.axioms)
    if (kb.is_ordinary(f))
      throw IllFormedTheory("'" + lang.display(f) + "' is both axiom and ordinary premise");
  for (const Rule& r : rules_)
    if (!r.strict() && !r.name) throw IllFormedTheory("defeasible rule without a name");

  // Default contrariness for the literal language: every strong literal pairs
  // with its flip as a contradictory; a weak literal ~b has its strong core b
  // as a contrary. Applies to every formula reachable in the theory.
  size_t before = 0;
  while (before != lang.size()) {  // flipping may intern new formulas
    before = lang.size();
    for (FormulaId f = 0; f < lang.size(); ++f) {
      const auto& sh = lang.shape(f);
      if (!sh) continue;
      if (sh->weak_neg) {
        FormulaId core = lang.intern_literal((sh->strong_neg ? "-" : "") + sh->atom);
        con.declare(core, f);
      } else {
        FormulaId flip = *lang.strong_flip(f);
        con.declare(flip, f);
        con.declare(f, flip);
      }
    }
  }

  // Ranks: higher rank is stronger; a ≤' b iff rank(a) ≤ rank(b).
  for (auto& [a, ra] : ranks_)
    for (auto& [b, rb] : ranks_)
      if (ra <= rb) premise_preorder.add_leq(a, b);

  for (RuleId r : defeasible_rule_ids()) rule_preorder.add_element(r);
  for (FormulaId f : kb.ordinary) premise_preorder.add_element(f);
  rule_preorder.close();
  premise_preorder.close();
  finalized_ = true;
}

std::vector<FormulaId> Theory::closure_under_strict(const std::vector<FormulaId>& s) const {
  std::vector<FormulaId> out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules_) {
      if (!r.strict() || sorted_contains(out, r.consequent)) continue;
      bool all = true;
      for (FormulaId a : r.antecedents)
        if (!sorted_contains(out, a)) {
          all = false;
          break;
        }
      if (all) {
        sorted_insert(out, r.consequent);
        changed = true;
      }
    }
  }
  return out;
}

bool Theory::is_directly_consistent(const std::vector<FormulaId>& s) const {
  for (FormulaId psi : s)
    for (FormulaId phi : con.cons_of(psi))
      if (sorted_contains(s, phi)) return false;
  return true;
}

bool Theory::is_indirectly_consistent(const std::vector<FormulaId>& s) const {
  return is_directly_consistent(closure_under_strict(s));
}

bool Theory::strictly_derives(const std::vector<FormulaId>& s, FormulaId phi) const {
  return sorted_contains(closure_under_strict(s), phi);
}

bool Theory::is_c_consistent_set(const std::vector<FormulaId>& s) const {
  std::vector<FormulaId> cl = closure_under_strict(s);
  for (FormulaId phi : cl)
    for (FormulaId psi : cl)
      if (phi < psi && con.is_contradictory(phi, psi)) return false;
  // A formula declared incompatible with itself counts as its own
  // contradictory.
  for (FormulaId phi : cl)
    if (con.in_con(phi, phi)) return false;
  return true;
}

std::vector<Rule> transpose_rules(const std::vector<Rule>& rules, Language& lang,
                                  Contrariness& con) {
  auto designated = [&](FormulaId f) -> FormulaId {
    if (auto d = con.designated_contradictory(f)) return *d;
    // Strong literals can always be flipped even if defaults were not
    // installed yet.
    if (auto flip = lang.strong_flip(f)) {
      con.declare(*flip, f);
      con.declare(f, *flip);
      return *flip;
    }
    throw MissingContradictory("no designated contradictory for '" + lang.display(f) + "'");
  };

  std::vector<Rule> out = rules;
  std::set<std::string> seen;
  auto key = [](const Rule& r) {
    std::vector<FormulaId> ante = r.antecedents;
    std::sort(ante.begin(), ante.end());
    std::string k = r.strict() ? "s|" : "d|";
    for (FormulaId a : ante) k += std::to_string(a) + ",";
    return k + "->" + std::to_string(r.consequent);
  };
  for (const Rule& r : out) seen.insert(key(r));

  for (size_t i = 0; i < out.size(); ++i) {
    if (!out[i].strict()) continue;
    Rule r = out[i];  // out may reallocate below
    FormulaId neg_cons = designated(r.consequent);
    for (size_t k = 0; k < r.antecedents.size(); ++k) {
      Rule t;
      t.kind = RuleKind::Strict;
      t.antecedents = r.antecedents;
      t.antecedents[k] = neg_cons;
      t.consequent = designated(r.antecedents[k]);
      if (seen.insert(key(t)).second) out.push_back(std::move(t));
    }
  }
  return out;
}

Theory Theory::transposed() const {
  Theory t = *this;
  std::vector<Rule> closed = transpose_rules(rules_, t.lang, t.con);
  t.rules_.clear();
  t.rule_index_.clear();
  t.name_index_.clear();
  for (Rule& r : closed) t.add_rule(std::move(r));
  // Preorders reference defeasible rule ids, which are preserved: the closure
  // keeps the original rules in order and only appends strict ones.
  if (finalized_) {
    t.finalized_ = false;
    t.finalize();
  }
  return t;
}

namespace {

// Sampled contraposition check: for strict derivations S ⊢ φ reachable from
// rule antecedent sets and bounded strict derivations over K, test
// S \ {s} ∪ {−φ} ⊢ −s.
void sample_contraposition(const Theory& t, WellDefinedReport& rep, size_t max_samples) {
  std::vector<std::pair<std::vector<FormulaId>, FormulaId>> samples;
  for (const Rule& r : t.rules()) {
    if (!r.strict() || r.antecedents.empty()) continue;
    std::vector<FormulaId> s = r.antecedents;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    samples.emplace_back(s, r.consequent);
  }
  // Derivations grounded in the knowledge base.
  std::vector<FormulaId> base = t.kb.all();
  std::vector<FormulaId> cl = t.closure_under_strict(base);
  for (FormulaId phi : cl) {
    if (sorted_contains(base, phi)) continue;
    samples.emplace_back(base, phi);
    if (samples.size() >= max_samples) break;
  }

  for (auto& [s, phi] : samples) {
    if (rep.contraposition_samples >= max_samples) break;
    auto neg_phi = t.con.designated_contradictory(phi);
    if (!neg_phi) continue;
    for (FormulaId elem : s) {
      auto neg_elem = t.con.designated_contradictory(elem);
      if (!neg_elem) continue;
      ++rep.contraposition_samples;
      std::vector<FormulaId> s2;
      for (FormulaId x : s)
        if (x != elem) sorted_insert(s2, x);
      sorted_insert(s2, *neg_phi);
      if (!t.strictly_derives(s2, *neg_elem)) {
        rep.contraposition_sampled = false;
        rep.contraposition_witnesses.push_back(
            {"S={" + [&] {
               std::string out;
               for (FormulaId x : s) out += t.lang.display(x) + " ";
               return out;
             }() + "} derives " +
             t.lang.display(phi) + " but removing '" + t.lang.display(elem) +
             "' and adding '" + t.lang.display(*neg_phi) + "' does not derive '" +
             t.lang.display(*neg_elem) + "'"});
        if (rep.contraposition_witnesses.size() >= 5) return;
      }
    }
  }
}

// Sampled c-classicality: minimal c-inconsistent subsets S (bounded size,
// drawn from formulas reachable in the theory) must satisfy
// S \ {φ} ⊢ −φ for every member.
void sample_c_classical(const Theory& t, WellDefinedReport& rep, uint64_t seed,
                        size_t max_samples) {
  std::vector<FormulaId> pool = t.kb.all();
  for (const Rule& r : t.rules()) {
    for (FormulaId a : r.antecedents) sorted_insert(pool, a);
    sorted_insert(pool, r.consequent);
  }
  std::mt19937_64 rng(seed);
  auto c_inconsistent = [&](const std::vector<FormulaId>& s) {
    return !t.is_c_consistent_set(s);
  };
  size_t tried = 0;
  size_t n = pool.size();
  // All pairs, then random triples.
  for (size_t i = 0; i < n && tried < max_samples; ++i)
    for (size_t j = i + 1; j < n && tried < max_samples; ++j) {
      std::vector<FormulaId> s{pool[i], pool[j]};
      std::sort(s.begin(), s.end());
      if (!c_inconsistent(s)) continue;
      bool minimal = !c_inconsistent({pool[i]}) && !c_inconsistent({pool[j]});
      if (!minimal) continue;
      ++tried;
      ++rep.c_classical_samples;
      for (FormulaId phi : s) {
        std::vector<FormulaId> rest;
        for (FormulaId x : s)
          if (x != phi) rest.push_back(x);
        auto neg = t.con.designated_contradictory(phi);
        if (!neg || !t.strictly_derives(rest, *neg)) {
          rep.c_classical_sampled = false;
          rep.c_classical_witnesses.push_back(
              {"minimal c-inconsistent set does not strictly derive the contradictory of '" +
               t.lang.display(phi) + "'"});
          if (rep.c_classical_witnesses.size() >= 5) return;
        }
      }
    }
  for (size_t it = 0; it < 200 && tried < max_samples && n >= 3; ++it) {
    std::vector<FormulaId> s;
    while (s.size() < 3) sorted_insert(s, pool[rng() % n]);
    if (!c_inconsistent(s)) continue;
    bool minimal = true;
    for (FormulaId skip : s) {
      std::vector<FormulaId> sub;
      for (FormulaId x : s)
        if (x != skip) sub.push_back(x);
      if (c_inconsistent(sub)) minimal = false;
    }
    if (!minimal) continue;
    ++tried;
    ++rep.c_classical_samples;
    for (FormulaId phi : s) {
      std::vector<FormulaId> rest;
      for (FormulaId x : s)
        if (x != phi) rest.push_back(x);
      auto neg = t.con.designated_contradictory(phi);
      if (!neg || !t.strictly_derives(rest, *neg)) {
        rep.c_classical_sampled = false;
        rep.c_classical_witnesses.push_back(
            {"minimal c-inconsistent set does not strictly derive the contradictory of '" +
             t.lang.display(phi) + "'"});
        if (rep.c_classical_witnesses.size() >= 5) return;
      }
    }
  }
}

}  // namespace

WellDefinedReport check_well_defined(const Theory& t, FrameworkMode mode, uint64_t seed) {
  WellDefinedReport rep;

  // Axiom consistency: Cl_Rs(K_n) directly consistent.
  std::vector<FormulaId> axiom_cl = t.closure_under_strict(t.kb.axioms);
  if (!t.is_directly_consistent(axiom_cl)) {
    rep.axiom_consistent = false;
    for (FormulaId psi : axiom_cl)
      for (FormulaId phi : t.con.cons_of(psi))
        if (sorted_contains(axiom_cl, phi) && rep.axiom_witnesses.size() < 5)
          rep.axiom_witnesses.push_back(
              {t.lang.display(phi) + " in conflict with " + t.lang.display(psi)});
  }

  // Well-formedness: no contrary may target an axiom or a strict-rule
  // consequent.
  std::vector<FormulaId> strict_cons;
  for (const Rule& r : t.rules())
    if (r.strict()) sorted_insert(strict_cons, r.consequent);
  for (FormulaId psi = 0; psi < t.lang.size(); ++psi) {
    for (FormulaId phi : t.con.cons_of(psi)) {
      if (!t.con.is_contrary(phi, psi)) continue;
      if (t.kb.is_axiom(psi) || sorted_contains(strict_cons, psi)) {
        rep.well_formed = false;
        if (rep.well_formed_witnesses.size() < 5)
          rep.well_formed_witnesses.push_back({"'" + t.lang.display(phi) +
                                               "' is a contrary of protected formula '" +
                                               t.lang.display(psi) + "'"});
      }
    }
  }

  // Transposition closure: exact syntactic scan.
  for (const Rule& r : t.rules()) {
    if (!r.strict() || r.antecedents.empty()) continue;
    auto neg_cons = t.con.designated_contradictory(r.consequent);
    bool rule_ok = true;
    std::string missing;
    if (!neg_cons) {
      rule_ok = false;
      missing = "consequent '" + t.lang.display(r.consequent) + "' has no contradictory";
    } else {
      for (size_t k = 0; k < r.antecedents.size() && rule_ok; ++k) {
        auto neg_ante = t.con.designated_contradictory(r.antecedents[k]);
        if (!neg_ante) {
          rule_ok = false;
          missing = "antecedent '" + t.lang.display(r.antecedents[k]) + "' has no contradictory";
          break;
        }
        std::vector<FormulaId> want = r.antecedents;
        want[k] = *neg_cons;
        std::sort(want.begin(), want.end());
        bool found = false;
        for (const Rule& cand : t.rules()) {
          if (!cand.strict() || cand.consequent != *neg_ante) continue;
          std::vector<FormulaId> have = cand.antecedents;
          std::sort(have.begin(), have.end());
          if (have == want) {
            found = true;
            break;
          }
        }
        if (!found) {
          rule_ok = false;
          missing = "missing transposition on antecedent '" +
                    t.lang.display(r.antecedents[k]) + "'";
        }
      }
    }
    if (!rule_ok) {
      rep.transposition_closed = false;
      if (rep.transposition_witnesses.size() < 5)
        rep.transposition_witnesses.push_back(
            {"rule concluding '" + t.lang.display(r.consequent) + "': " + missing});
    }
  }

  sample_contraposition(t, rep, 500);
  if (mode == FrameworkMode::CSaf) sample_c_classical(t, rep, seed, 500);

  // Informational flags.
  for (FormulaId f = 0; f < t.lang.size(); ++f) {
    if (!t.con.designated_contradictory(f)) rep.missing_contradictory.push_back(t.lang.display(f));
    if (t.con.in_con(f, f)) rep.self_incompatible.push_back(t.lang.display(f));
  }
  return rep;
}

}  // namespace aspic
