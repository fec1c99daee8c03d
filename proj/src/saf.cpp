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

#include "aspic/saf.hpp"

#include <algorithm>

namespace aspic {

std::vector<Defeat> compute_defeats(const std::vector<Attack>& attacks,
                                    const ArgumentOrdering& ord) {
  std::vector<Defeat> out;
  for (const Attack& at : attacks) {
    if (at.preference_dependent && ord.strictly_preferred(at.attacker, at.on)) continue;
    out.push_back({at.attacker, at.target, at.on});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool StructuredAF::defeats_pair(ArgId a, ArgId b) const {
  for (const Defeat& d : defeats)
    if (d.attacker == a && d.target == b) return true;
  return false;
}

bool StructuredAF::attacks_pair(ArgId a, ArgId b) const {
  for (const Attack& at : attacks)
    if (at.attacker == a && at.target == b) return true;
  return false;
}

StructuredAF build_saf(std::shared_ptr<const Theory> theory, OrderingSpec ordering,
                       FrameworkMode mode, const BuildLimits& limits,
                       const CConsistencyOracle* oracle) {
  if (!theory->finalized()) throw Error("theory must be finalized before building a SAF");
  BuildResult built = build_arguments(*theory, limits);

  StructuredAF saf{theory,
                   std::move(built.args),
                   std::move(built.universe),
                   {},
                   {},
                   ordering,
                   mode,
                   limits,
                   built.exact_universe,
                   built.pruned_by_path,
                   built.pruned_by_depth,
                   check_well_defined(*theory, mode)};

  if (mode == FrameworkMode::CSaf) {
    CConsistencyOracle fallback = rule_based_oracle(*theory);
    const CConsistencyOracle& use = oracle ? *oracle : fallback;
    std::vector<ArgId> kept;
    for (ArgId a : saf.universe)
      if (is_c_consistent(saf.args, a, use)) kept.push_back(a);
    saf.universe = std::move(kept);
  }

  saf.attacks = compute_attacks(saf.args, saf.universe);
  LinkOrdering ord(saf.args, ordering.link, ordering.setcomp, theory->rule_preorder,
                   theory->premise_preorder);
  saf.defeats = compute_defeats(saf.attacks, ord);
  return saf;
}

}  // namespace aspic
