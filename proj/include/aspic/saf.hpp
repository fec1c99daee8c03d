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

#include "aspic/attack.hpp"
#include "aspic/ordering.hpp"
#include "aspic/theory.hpp"

namespace aspic {

/// A defeat, with the attacked sub-argument retained for diagnostics.
struct Defeat {
  ArgId attacker;
  ArgId target;
  ArgId on;

  bool operator<(const Defeat& o) const {
    if (attacker != o.attacker) return attacker < o.attacker;
    if (target != o.target) return target < o.target;
    return on < o.on;
  }
  bool operator==(const Defeat& o) const {
    return attacker == o.attacker && target == o.target && on == o.on;
  }
};

/// Preference-independent attacks always defeat; a
/// preference-dependent attack on B' defeats iff the attacker is not
/// strictly below B' (the attacked sub-argument, not the whole target).
std::vector<Defeat> compute_defeats(const std::vector<Attack>& attacks,
                                    const ArgumentOrdering& ord);

struct OrderingSpec {
  LinkPrinciple link = LinkPrinciple::LastLink;
  SetComparison setcomp = SetComparison::Elitist;
};

/// A (c-)SAF: the argument universe with its attack and defeat relations and
/// the ordering that produced the defeats.
struct StructuredAF {
  std::shared_ptr<const Theory> theory;
  ArgumentSet args;
  std::vector<ArgId> universe;
  std::vector<Attack> attacks;
  std::vector<Defeat> defeats;
  OrderingSpec ordering;
  FrameworkMode mode = FrameworkMode::Saf;

  // Metadata for reproducibility.
  BuildLimits limits;
  bool exact_universe = true;
  size_t pruned_by_path = 0;
  size_t pruned_by_depth = 0;
  WellDefinedReport well_defined;

  bool defeats_pair(ArgId a, ArgId b) const;
  bool attacks_pair(ArgId a, ArgId b) const;
  // Derived predicate: a defeats b and b does not defeat a.
  bool strictly_defeats(ArgId a, ArgId b) const {
    return defeats_pair(a, b) && !defeats_pair(b, a);
  }
};

/// Builds the (c-)SAF of a finalized theory: arguments (c-filtered in c-SAF
/// mode via the rule-based oracle unless one is injected), attacks, ordering,
/// defeats. Well-formedness problems are reported, not fatal.
StructuredAF build_saf(std::shared_ptr<const Theory> theory, OrderingSpec ordering,
                       FrameworkMode mode = FrameworkMode::Saf, const BuildLimits& limits = {},
                       const CConsistencyOracle* oracle = nullptr);

}  // namespace aspic
