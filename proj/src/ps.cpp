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

#include <algorithm>
#include <map>
#include <set>

#include "aspic/classical.hpp"

// The subset-enumeration oracle deliberately carries its own consistency
// evaluator (whole truth tables as bitsets, built bottom-up per subformula)
// so that it shares no reasoning code with the argumentation path's
// per-valuation evaluator.
namespace aspic::ps {

using classical::Op;
using classical::PF;
using classical::PropPool;

namespace {

using Table = std::vector<uint64_t>;  // one bit per valuation

Table full_table(size_t words, uint64_t tail_mask) {
  Table t(words, ~0ull);
  if (!t.empty()) t.back() = tail_mask;
  return t;
}

Table table_of(const PropPool& pool, PF f, const std::map<std::string, int>& atom_bit,
               size_t valuations, size_t words, uint64_t tail_mask) {
  const auto& n = pool.node(f);
  switch (n.op) {
    case Op::Atom: {
      Table t(words, 0);
      int bit = atom_bit.at(n.atom);
      for (size_t v = 0; v < valuations; ++v)
        if ((v >> bit) & 1) t[v / 64] |= 1ull << (v % 64);
      return t;
    }
    case Op::Not: {
      Table t = table_of(pool, n.a, atom_bit, valuations, words, tail_mask);
      for (size_t i = 0; i < words; ++i) t[i] = ~t[i];
      if (!t.empty()) t.back() &= tail_mask;
      return t;
    }
    case Op::And: {
      Table a = table_of(pool, n.a, atom_bit, valuations, words, tail_mask);
      Table b = table_of(pool, n.b, atom_bit, valuations, words, tail_mask);
      for (size_t i = 0; i < words; ++i) a[i] &= b[i];
      return a;
    }
    case Op::Or: {
      Table a = table_of(pool, n.a, atom_bit, valuations, words, tail_mask);
      Table b = table_of(pool, n.b, atom_bit, valuations, words, tail_mask);
      for (size_t i = 0; i < words; ++i) a[i] |= b[i];
      return a;
    }
    case Op::Implies: {
      Table a = table_of(pool, n.a, atom_bit, valuations, words, tail_mask);
      Table b = table_of(pool, n.b, atom_bit, valuations, words, tail_mask);
      for (size_t i = 0; i < words; ++i) a[i] = (~a[i]) | b[i];
      if (!a.empty()) a.back() &= tail_mask;
      return a;
    }
  }
  return Table(words, 0);
}

}  // namespace

bool oracle_consistent(const PropPool& pool, const std::vector<PF>& s) {
  std::set<std::string> atoms;
  for (PF f : s) pool.collect_atoms(f, atoms);
  if (atoms.size() > static_cast<size_t>(classical::kAtomBudget))
    throw AtomBudget("oracle limited to " + std::to_string(classical::kAtomBudget) + " atoms");
  std::map<std::string, int> atom_bit;
  int next = 0;
  for (const auto& a : atoms) atom_bit[a] = next++;
  size_t valuations = 1ull << atoms.size();
  size_t words = (valuations + 63) / 64;
  uint64_t tail_mask =
      valuations % 64 == 0 ? ~0ull : ((1ull << (valuations % 64)) - 1);

  Table acc = full_table(words, tail_mask);
  for (PF f : s) {
    Table t = table_of(pool, f, atom_bit, valuations, words, tail_mask);
    for (size_t i = 0; i < words; ++i) acc[i] &= t[i];
  }
  for (uint64_t w : acc)
    if (w) return true;
  return false;
}

std::vector<std::vector<PF>> preferred_subtheories(const PropPool& pool,
                                                   const classical::StratifiedTheory& strata) {
  // Stratum-wise: extend each prefix with every subset of the next stratum
  // that is consistent with it and maximal among such subsets.
  std::vector<std::vector<PF>> prefixes{{}};
  for (const auto& stratum : strata.strata) {
    size_t n = stratum.size();
    if (n > 20) throw BudgetExceeded("stratum too large for subset enumeration");
    std::vector<std::vector<PF>> next;
    for (const auto& prefix : prefixes) {
      std::vector<uint32_t> good;
      for (uint32_t m = 0; m < (1u << n); ++m) {
        std::vector<PF> candidate = prefix;
        for (size_t i = 0; i < n; ++i)
          if ((m >> i) & 1) candidate.push_back(stratum[i]);
        if (oracle_consistent(pool, candidate)) good.push_back(m);
      }
      for (uint32_t m : good) {
        bool maximal = true;
        for (uint32_t m2 : good)
          if (m2 != m && (m2 & m) == m) {
            maximal = false;
            break;
          }
        if (!maximal) continue;
        std::vector<PF> extended = prefix;
        for (size_t i = 0; i < n; ++i)
          if ((m >> i) & 1) extended.push_back(stratum[i]);
        next.push_back(std::move(extended));
      }
    }
    prefixes = std::move(next);
  }
  // Canonical order, deduplicated.
  for (auto& p : prefixes) std::sort(p.begin(), p.end());
  std::sort(prefixes.begin(), prefixes.end());
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  return prefixes;
}

}  // namespace aspic::ps
