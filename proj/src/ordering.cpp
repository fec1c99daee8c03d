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

#include "aspic/ordering.hpp"

#include <random>

namespace aspic {

bool set_compare(const std::vector<uint32_t>& gamma, const std::vector<uint32_t>& gamma_prime,
                 SetComparison s, const Preorder& pre) {
  if (gamma.empty()) return false;
  if (gamma_prime.empty()) return true;
  if (s == SetComparison::Elitist) {
    for (uint32_t x : gamma) {
      bool below_all = true;
      for (uint32_t y : gamma_prime)
        if (!pre.lt(x, y)) {
          below_all = false;
          break;
        }
      if (below_all) return true;
    }
    return false;
  }
  for (uint32_t x : gamma) {
    bool some_above = false;
    for (uint32_t y : gamma_prime)
      if (pre.lt(x, y)) {
        some_above = true;
        break;
      }
    if (!some_above) return false;
  }
  return true;
}

bool set_compare_leq(const std::vector<uint32_t>& gamma, const std::vector<uint32_t>& gamma_prime,
                     SetComparison s, const Preorder& pre) {
  return gamma == gamma_prime || set_compare(gamma, gamma_prime, s, pre);
}

bool LinkOrdering::strictly_preferred(ArgId b, ArgId a) const {
  const Argument& B = set_->arg(b);
  const Argument& A = set_->arg(a);
  if (link_ == LinkPrinciple::LastLink) {
    if (set_compare(B.last_def_rules, A.last_def_rules, s_, *rule_pre_)) return true;
    return B.last_def_rules.empty() && A.last_def_rules.empty() &&
           set_compare(B.prem_p, A.prem_p, s_, *prem_pre_);
  }
  // Weakest link: strict/strict, then firm/firm, then both comparisons.
  if (B.strict() && A.strict()) return set_compare(B.prem_p, A.prem_p, s_, *prem_pre_);
  if (B.firm() && A.firm()) return set_compare(B.def_rules, A.def_rules, s_, *rule_pre_);
  return set_compare(B.prem_p, A.prem_p, s_, *prem_pre_) &&
         set_compare(B.def_rules, A.def_rules, s_, *rule_pre_);
}

bool LinkOrdering::leq(ArgId b, ArgId a) const {
  if (strictly_preferred(b, a)) return true;
  const Argument& B = set_->arg(b);
  const Argument& A = set_->arg(a);
  if (link_ == LinkPrinciple::LastLink) {
    if (!A.last_def_rules.empty()) return A.last_def_rules == B.last_def_rules;
    return A.prem_p == B.prem_p;
  }
  return A.def_rules == B.def_rules && A.prem_p == B.prem_p;
}

namespace {
std::vector<uint32_t> random_subset(const std::vector<uint32_t>& elements, std::mt19937_64& rng,
                                    size_t max_size) {
  std::vector<uint32_t> out;
  if (elements.empty()) return out;
  size_t k = rng() % (max_size + 1);
  for (size_t i = 0; i < k; ++i) sorted_insert(out, elements[rng() % elements.size()]);
  return out;
}

std::string show_set(const std::vector<uint32_t>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}
}  // namespace

PropertyReport check_reasonable_inducing(const SetCompareFn& cmp,
                                         const std::vector<uint32_t>& elements, size_t samples,
                                         uint64_t seed) {
  PropertyReport rep;
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < samples; ++i) {
    ++rep.samples;
    auto g1 = random_subset(elements, rng, 3);
    auto g2 = random_subset(elements, rng, 3);
    auto g3 = random_subset(elements, rng, 3);
    if (cmp(g1, g1)) rep.fail("irreflexivity: " + show_set(g1) + " below itself");
    if (cmp(g1, g2) && cmp(g2, g3) && !cmp(g1, g3))
      rep.fail("transitivity: " + show_set(g1) + " < " + show_set(g2) + " < " + show_set(g3));

    // Union splitting.
    size_t parts = 1 + rng() % 3;
    std::vector<std::vector<uint32_t>> family;
    std::vector<uint32_t> uni;
    for (size_t p = 0; p < parts; ++p) {
      family.push_back(random_subset(elements, rng, 2));
      for (uint32_t x : family.back()) sorted_insert(uni, x);
    }
    auto a = random_subset(elements, rng, 3);
    if (cmp(uni, a)) {
      bool some = false;
      for (auto& part : family)
        if (cmp(part, a)) {
          some = true;
          break;
        }
      if (!some) rep.fail("union-splitting: union " + show_set(uni) + " below " + show_set(a) +
                          " but no part is");
    }
  }
  return rep;
}

PropertyReport check_reasonable_sample(const ArgumentSet& set, const ArgumentOrdering& ord,
                                       const std::vector<ArgId>& universe, size_t samples,
                                       uint64_t seed) {
  PropertyReport rep;
  std::mt19937_64 rng(seed);
  if (universe.empty()) return rep;
  auto pick = [&] { return universe[rng() % universe.size()]; };

  // Clause 1-i/1-ii on random pairs.
  for (size_t i = 0; i < samples; ++i) {
    ++rep.samples;
    ArgId a = pick(), b = pick();
    const Argument& A = set.arg(a);
    const Argument& B = set.arg(b);
    if (A.strict() && A.firm() && B.fallible() && !ord.strictly_preferred(b, a))
      rep.fail("clause 1-i: fallible " + set.describe(b) + " not below strict+firm " +
               set.describe(a));
    if (B.strict() && B.firm() && ord.strictly_preferred(b, a))
      rep.fail("clause 1-ii: strict+firm " + set.describe(b) + " below " + set.describe(a));
  }

  // Clause 1-iii over strict-continuation pairs found in the universe.
  std::vector<std::pair<ArgId, ArgId>> continuations;  // (a, a') with a' continuing {a}
  for (ArgId a : universe)
    for (ArgId ap : universe)
      if (a != ap && is_strict_continuation(set, ap, {a})) {
        continuations.emplace_back(a, ap);
        if (continuations.size() >= 64) break;
      }
  for (auto& [a, ap] : continuations)
    for (size_t i = 0; i < std::min<size_t>(samples, 20); ++i) {
      ++rep.samples;
      ArgId b = pick();
      if (!ord.strictly_preferred(a, b) && ord.strictly_preferred(ap, b))
        rep.fail("clause 1-iii: continuation weakened " + set.describe(a));
      if (!ord.strictly_preferred(b, a) && ord.strictly_preferred(b, ap))
        rep.fail("clause 1-iii: continuation strengthened " + set.describe(a));
    }

  // Clause 2: for sampled {C1..Cn} with continuations C^{+\i} present in the
  // universe, not all C^{+\i} ≺ Ci.
  for (size_t i = 0; i < samples; ++i) {
    size_t n = 2 + rng() % 2;
    std::vector<ArgId> cs;
    for (size_t k = 0; k < n; ++k) sorted_insert(cs, pick());
    if (cs.size() < 2) continue;
    bool all_dominated = true;
    std::vector<ArgId> found;
    for (size_t k = 0; k < cs.size() && all_dominated; ++k) {
      std::vector<ArgId> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      bool any = false;
      for (ArgId cand : universe)
        if (is_strict_continuation(set, cand, rest) && ord.strictly_preferred(cand, cs[k])) {
          any = true;
          found.push_back(cand);
          break;
        }
      if (!any) all_dominated = false;
    }
    ++rep.samples;
    if (all_dominated && !cs.empty()) {
      std::string w = "clause 2: every strict continuation dominated for {";
      for (ArgId c : cs) w += set.describe(c) + " ";
      rep.fail(w + "}");
    }
  }
  return rep;
}

}  // namespace aspic
