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
#include <string>
#include <vector>

#include "aspic/argument.hpp"
#include "aspic/preorder.hpp"

namespace aspic {

enum class LinkPrinciple { LastLink, WeakestLink };
enum class SetComparison { Elitist, Democratic };

/// Set comparison Γ ◁_s Γ'. Clause order matters:
/// empty Γ never wins, anything non-empty beats an empty Γ', else
/// Eli: ∃X∈Γ ∀Y∈Γ' X<Y; Dem: ∀X∈Γ ∃Y∈Γ' X<Y.
bool set_compare(const std::vector<uint32_t>& gamma, const std::vector<uint32_t>& gamma_prime,
                 SetComparison s, const Preorder& pre);

/// Γ ⊴_s Γ': Γ ◁_s Γ' or set identity.
bool set_compare_leq(const std::vector<uint32_t>& gamma, const std::vector<uint32_t>& gamma_prime,
                     SetComparison s, const Preorder& pre);

/// Argument ordering hook. The shipped implementations are the last- and
/// weakest-link principles over Elitist/Democratic comparisons; other
/// orderings can subclass.
class ArgumentOrdering {
 public:
  virtual ~ArgumentOrdering() = default;
  virtual bool strictly_preferred(ArgId b, ArgId a) const = 0;  // b ≺ a
  virtual bool leq(ArgId b, ArgId a) const = 0;                 // b ⪯ a
};

class LinkOrdering : public ArgumentOrdering {
 public:
  LinkOrdering(const ArgumentSet& set, LinkPrinciple link, SetComparison s,
               const Preorder& rule_pre, const Preorder& prem_pre)
      : set_(&set), link_(link), s_(s), rule_pre_(&rule_pre), prem_pre_(&prem_pre) {}

  bool strictly_preferred(ArgId b, ArgId a) const override;
  bool leq(ArgId b, ArgId a) const override;

  LinkPrinciple link() const { return link_; }
  SetComparison setcomp() const { return s_; }

 private:
  const ArgumentSet* set_;
  LinkPrinciple link_;
  SetComparison s_;
  const Preorder* rule_pre_;
  const Preorder* prem_pre_;
};

/// A set-comparison functor for the reasonable-inducing checks; built-ins
/// wrap set_compare, tests may inject their own.
using SetCompareFn =
    std::function<bool(const std::vector<uint32_t>&, const std::vector<uint32_t>&)>;

struct PropertyReport {
  bool ok = true;
  size_t samples = 0;
  std::vector<std::string> witnesses;
  void fail(std::string w) {
    ok = false;
    if (witnesses.size() < 8) witnesses.push_back(std::move(w));
  }
};

/// Samples the reasonable-inducing conditions on a comparison: irreflexivity and
/// transitivity over random subsets of the preorder's elements, and the
/// union-splitting condition ∪kr(Bi) ◁ kr(A) ⇒ ∃i kr(Bi) ◁ kr(A).
PropertyReport check_reasonable_inducing(const SetCompareFn& cmp,
                                         const std::vector<uint32_t>& elements, size_t samples,
                                         uint64_t seed);

inline SetCompareFn builtin_compare(SetComparison s, const Preorder& pre) {
  return [&pre, s](const std::vector<uint32_t>& g, const std::vector<uint32_t>& gp) {
    return set_compare(g, gp, s, pre);
  };
}

/// Samples the reasonable-argument-ordering conditions (strict-firm
/// dominance clauses and the n-way strict-continuation non-domination
/// condition) on tuples drawn from `universe`.
PropertyReport check_reasonable_sample(const ArgumentSet& set, const ArgumentOrdering& ord,
                                       const std::vector<ArgId>& universe, size_t samples,
                                       uint64_t seed);

}  // namespace aspic
