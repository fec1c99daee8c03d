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

#include "aspic/attack.hpp"

#include <algorithm>

namespace aspic {

const char* attack_kind_name(AttackKind k) {
  switch (k) {
    case AttackKind::Undercut: return "undercut";
    case AttackKind::Rebut: return "rebut";
    case AttackKind::ContraryRebut: return "contrary-rebut";
    case AttackKind::Undermine: return "undermine";
    case AttackKind::ContraryUndermine: return "contrary-undermine";
  }
  return "?";
}

std::vector<Attack> compute_attacks(const ArgumentSet& set, const std::vector<ArgId>& universe) {
  const Theory& t = set.theory();
  std::vector<Attack> out;

  // Containment index restricted to the universe.
  std::map<ArgId, std::vector<ArgId>> containers;
  for (ArgId b : universe)
    for (ArgId s : set.arg(b).sub) containers[s].push_back(b);

  // Attackable points, each hit once per attacker conclusion.
  struct Point {
    ArgId on;
    FormulaId target_formula;  // n(r) for undercuts, Conc otherwise
    bool undercut;
    bool rebut;  // false, !undercut: undermine
  };
  std::vector<Point> points;
  for (auto& [s, _] : containers) {
    const Argument& sa = set.arg(s);
    if (sa.is_premise()) {
      if (t.kb.is_ordinary(sa.conc)) points.push_back({s, sa.conc, false, false});
    } else if (!t.rule(*sa.rule).strict()) {
      points.push_back({s, sa.conc, false, true});
      points.push_back({s, *t.rule(*sa.rule).name, true, false});
    }
  }

  for (ArgId a : universe) {
    FormulaId ca = set.arg(a).conc;
    for (const Point& p : points) {
      if (!t.con.in_con(ca, p.target_formula)) continue;
      AttackKind kind;
      bool pref_dep;
      if (p.undercut) {
        kind = AttackKind::Undercut;
        pref_dep = false;
      } else {
        bool contrary = t.con.is_contrary(ca, p.target_formula);
        if (p.rebut)
          kind = contrary ? AttackKind::ContraryRebut : AttackKind::Rebut;
        else
          kind = contrary ? AttackKind::ContraryUndermine : AttackKind::Undermine;
        pref_dep = !contrary;
      }
      for (ArgId target : containers.at(p.on))
        out.push_back({a, target, p.on, kind, pref_dep});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<AttackKind, size_t> attack_kind_stats(const std::vector<Attack>& attacks) {
  std::map<AttackKind, size_t> stats{{AttackKind::Undercut, 0},
                                     {AttackKind::Rebut, 0},
                                     {AttackKind::ContraryRebut, 0},
                                     {AttackKind::Undermine, 0},
                                     {AttackKind::ContraryUndermine, 0}};
  for (const Attack& a : attacks) ++stats[a.kind];
  return stats;
}

}  // namespace aspic
