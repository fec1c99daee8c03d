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
#include <string>
#include <vector>

#include "aspic/argument.hpp"

namespace aspic {

enum class AttackKind { Undercut, Rebut, ContraryRebut, Undermine, ContraryUndermine };

const char* attack_kind_name(AttackKind k);

/// One attack record per (attacker, target, on, kind). The same pair of
/// arguments may carry several records; defeat quantifies over them.
struct Attack {
  ArgId attacker;
  ArgId target;
  ArgId on;  // the attacked sub-argument, on ∈ Sub(target)
  AttackKind kind;
  bool preference_dependent;

  bool operator<(const Attack& o) const {
    if (attacker != o.attacker) return attacker < o.attacker;
    if (target != o.target) return target < o.target;
    if (on != o.on) return on < o.on;
    return static_cast<int>(kind) < static_cast<int>(o.kind);
  }
  bool operator==(const Attack& o) const {
    return attacker == o.attacker && target == o.target && on == o.on && kind == o.kind;
  }
};

/// All attacks among `universe`: undercuts on defeasible-rule names,
/// restricted rebuts on defeasible-top sub-arguments, undermines on ordinary
/// premises. Plain rebut/undermine records are preference-dependent; the
/// contrary and undercut forms are not.
std::vector<Attack> compute_attacks(const ArgumentSet& set, const std::vector<ArgId>& universe);

std::map<AttackKind, size_t> attack_kind_stats(const std::vector<Attack>& attacks);

}  // namespace aspic
