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

#include "aspic/argument.hpp"

#include <algorithm>

namespace aspic {

namespace {
std::string structural_key(std::optional<RuleId> rule, FormulaId conc,
                           const std::vector<ArgId>& children) {
  std::string key = rule ? "r" + std::to_string(*rule) : "k" + std::to_string(conc);
  for (ArgId c : children) key += "." + std::to_string(c);
  return key;
}
}  // namespace

ArgId ArgumentSet::add_premise(FormulaId f) {
  std::string key = structural_key(std::nullopt, f, {});
  auto it = dedup_.find(key);
  if (it != dedup_.end()) return it->second;

  Argument a;
  a.conc = f;
  a.prem = {f};
  if (theory_->kb.is_axiom(f)) a.prem_n = {f};
  if (theory_->kb.is_ordinary(f)) a.prem_p = {f};
  a.all_concs = {f};
  a.id = hex64(fnv1a64("k|" + theory_->lang.display(f)));

  ArgId id = static_cast<ArgId>(nodes_.size());
  a.sub = {id};
  dedup_.emplace(std::move(key), id);
  nodes_.push_back(std::move(a));
  return id;
}

ArgId ArgumentSet::add_rule_app(RuleId r, const std::vector<ArgId>& children) {
  std::string key = structural_key(r, 0, children);
  auto it = dedup_.find(key);
  if (it != dedup_.end()) return it->second;

  const Rule& rule = theory_->rule(r);
  Argument a;
  a.rule = r;
  a.conc = rule.consequent;
  a.children = children;
  for (ArgId c : children) {
    const Argument& ch = nodes_.at(c);
    a.prem = sorted_union(a.prem, ch.prem);
    a.prem_n = sorted_union(a.prem_n, ch.prem_n);
    a.prem_p = sorted_union(a.prem_p, ch.prem_p);
    a.sub = sorted_union(a.sub, ch.sub);
    a.rules = sorted_union(a.rules, ch.rules);
    a.def_rules = sorted_union(a.def_rules, ch.def_rules);
    a.strict_rules = sorted_union(a.strict_rules, ch.strict_rules);
    a.all_concs = sorted_union(a.all_concs, ch.all_concs);
    a.depth = std::max(a.depth, ch.depth + 1);
  }
  sorted_insert(a.rules, r);
  if (rule.strict()) {
    sorted_insert(a.strict_rules, r);
    for (ArgId c : children)
      a.last_def_rules = sorted_union(a.last_def_rules, nodes_.at(c).last_def_rules);
  } else {
    sorted_insert(a.def_rules, r);
    a.last_def_rules = {r};
  }
  sorted_insert(a.all_concs, a.conc);

  std::string ser = rule.strict() ? "r|s|" : "r|d|";
  for (FormulaId f : rule.antecedents) ser += theory_->lang.display(f) + ",";
  ser += "->" + theory_->lang.display(rule.consequent) + "|";
  for (ArgId c : children) ser += nodes_.at(c).id + ";";
  a.id = hex64(fnv1a64(ser));

  ArgId id = static_cast<ArgId>(nodes_.size());
  sorted_insert(a.sub, id);
  dedup_.emplace(std::move(key), id);
  nodes_.push_back(std::move(a));
  return id;
}

std::optional<ArgId> ArgumentSet::find_rule_app(RuleId r, const std::vector<ArgId>& children) const {
  auto it = dedup_.find(structural_key(r, 0, children));
  if (it == dedup_.end()) return std::nullopt;
  return it->second;
}

std::vector<ArgId> ArgumentSet::containers_of(ArgId a) const {
  std::vector<ArgId> out;
  for (ArgId b = 0; b < nodes_.size(); ++b)
    if (sorted_contains(nodes_[b].sub, a)) out.push_back(b);
  return out;
}

std::string ArgumentSet::describe(ArgId a) const {
  const Argument& n = nodes_.at(a);
  if (n.is_premise()) return "[" + theory_->lang.display(n.conc) + "]";
  std::string out = "[";
  for (size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ",";
    out += describe(n.children[i]);
  }
  out += theory_->rule(*n.rule).strict() ? "->" : "=>";
  out += theory_->lang.display(n.conc) + "]";
  return out;
}

BuildResult build_arguments(const Theory& t, const BuildLimits& limits) {
  limits.validate();
  BuildResult res{ArgumentSet(&t), {}, true, 0, 0};
  ArgumentSet& set = res.args;

  // Conclusion -> argument ids, in construction order.
  std::map<FormulaId, std::vector<ArgId>> by_conc;
  auto note = [&](ArgId id) {
    if (set.size() > limits.max_arguments)
      throw BudgetExceeded("argument budget exceeded (max_arguments=" +
                           std::to_string(limits.max_arguments) + ")");
    const Argument& a = set.arg(id);
    auto& v = by_conc[a.conc];
    if (std::find(v.begin(), v.end(), id) == v.end()) {
      v.push_back(id);
      res.universe.push_back(id);
      return true;
    }
    return false;
  };

  for (FormulaId f : t.kb.all()) note(set.add_premise(f));

  bool changed = true;
  while (changed) {
    changed = false;
    for (RuleId r = 0; r < t.rules().size(); ++r) {
      const Rule& rule = t.rule(r);
      // Cartesian product of candidate children per antecedent position.
      std::vector<const std::vector<ArgId>*> pools;
      bool feasible = true;
      for (FormulaId a : rule.antecedents) {
        auto it = by_conc.find(a);
        if (it == by_conc.end() || it->second.empty()) {
          feasible = false;
          break;
        }
        pools.push_back(&it->second);
      }
      if (!feasible) continue;

      std::vector<size_t> idx(pools.size(), 0);
      while (true) {
        std::vector<ArgId> children(pools.size());
        for (size_t i = 0; i < pools.size(); ++i) children[i] = (*pools[i])[idx[i]];

        bool admissible_tuple = true;
        if (!set.find_rule_app(r, children)) {
          int depth = 1;
          for (ArgId c : children) depth = std::max(depth, set.arg(c).depth + 1);
          if (depth > limits.max_depth) {
            admissible_tuple = false;
            ++res.pruned_by_depth;
            res.exact_universe = false;
          }
          if (admissible_tuple && limits.distinct_conclusions_per_path) {
            for (ArgId c : children)
              if (sorted_contains(set.arg(c).all_concs, rule.consequent)) {
                admissible_tuple = false;
                ++res.pruned_by_path;
                // Pruned compositions are not necessarily missing arguments:
                // they would repeat a conclusion on a path, which a cycle-free
                // rule set never needs. Exactness is only lost if the rule
                // graph is cyclic; conservatively record the pruning.
                res.exact_universe = false;
                break;
              }
          }
          if (admissible_tuple) {
            ArgId id = set.add_rule_app(r, children);
            if (note(id)) changed = true;
          }
        }

        // Advance the product; zero-antecedent rules visit the empty tuple
        // exactly once.
        size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < pools[i]->size()) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
    }
  }
  return res;
}

std::vector<ArgId> max_fallible_subargs(const ArgumentSet& set, ArgId a) {
  const Argument& arg = set.arg(a);
  std::vector<ArgId> fallible;
  for (ArgId s : arg.sub) {
    const Argument& sa = set.arg(s);
    bool premise_ordinary = sa.is_premise() && set.theory().kb.is_ordinary(sa.conc);
    bool defeasible_top = sa.rule && !set.theory().rule(*sa.rule).strict();
    if (premise_ordinary || defeasible_top) fallible.push_back(s);
  }
  std::vector<ArgId> out;
  for (ArgId s : fallible) {
    bool maximal = true;
    for (ArgId other : fallible)
      if (other != s && sorted_contains(set.arg(other).sub, s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool is_strict_continuation(const ArgumentSet& set, ArgId a, const std::vector<ArgId>& parts) {
  std::vector<FormulaId> prem_p, prem_n;
  std::vector<RuleId> def_rules, strict_rules;
  for (ArgId p : parts) {
    const Argument& pa = set.arg(p);
    prem_p = sorted_union(prem_p, pa.prem_p);
    prem_n = sorted_union(prem_n, pa.prem_n);
    def_rules = sorted_union(def_rules, pa.def_rules);
    strict_rules = sorted_union(strict_rules, pa.strict_rules);
  }
  const Argument& arg = set.arg(a);
  return arg.prem_p == prem_p && arg.def_rules == def_rules &&
         is_subset(strict_rules, arg.strict_rules) && is_subset(prem_n, arg.prem_n);
}

CConsistencyOracle rule_based_oracle(const Theory& t) {
  return [&t](const std::vector<FormulaId>& prem) { return t.is_c_consistent_set(prem); };
}

bool is_c_consistent(const ArgumentSet& set, ArgId a, const CConsistencyOracle& oracle) {
  return oracle(set.arg(a).prem);
}

std::vector<ArgId> premise_minimal_filter(const ArgumentSet& set, const std::vector<ArgId>& args) {
  std::vector<ArgId> out;
  for (ArgId a : args) {
    bool minimal = true;
    for (ArgId b : args) {
      if (b == a) continue;
      const Argument& aa = set.arg(a);
      const Argument& bb = set.arg(b);
      if (bb.conc == aa.conc && is_proper_subset(bb.prem, aa.prem)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace aspic
