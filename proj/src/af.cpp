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

#include "aspic/af.hpp"

#include <algorithm>

namespace aspic {

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Admissible: return "admissible";
    case Semantics::Complete: return "complete";
    case Semantics::Grounded: return "grounded";
    case Semantics::Preferred: return "preferred";
    case Semantics::Stable: return "stable";
  }
  return "?";
}

const char* cf_mode_name(CfMode m) { return m == CfMode::Attack ? "att" : "def"; }

std::optional<Semantics> semantics_from_name(const std::string& s) {
  if (s == "admissible") return Semantics::Admissible;
  if (s == "complete") return Semantics::Complete;
  if (s == "grounded") return Semantics::Grounded;
  if (s == "preferred") return Semantics::Preferred;
  if (s == "stable") return Semantics::Stable;
  return std::nullopt;
}

void AbstractAF::freeze() {
  auto dedup = [](std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(defeat_edges);
  dedup(attack_edges);
  defeaters.assign(n, {});
  defeated.assign(n, {});
  att.assign(n, std::vector<uint8_t>(n, 0));
  for (auto& [a, b] : defeat_edges) {
    defeaters[b].push_back(a);
    defeated[a].push_back(b);
  }
  for (auto& [a, b] : attack_edges) att[a][b] = 1;
}

bool AbstractAF::conflict_free(const std::vector<int>& s, CfMode mode) const {
  if (mode == CfMode::Attack) {
    for (int x : s)
      for (int y : s)
        if (att[x][y]) return false;
    return true;
  }
  for (int x : s)
    for (int y : defeated[x])
      if (std::binary_search(s.begin(), s.end(), y)) return false;
  return true;
}

bool AbstractAF::acceptable(int x, const std::vector<int>& s) const {
  for (int y : defeaters[x]) {
    bool countered = false;
    for (int z : defeaters[y])
      if (std::binary_search(s.begin(), s.end(), z)) {
        countered = true;
        break;
      }
    if (!countered) return false;
  }
  return true;
}

bool AbstractAF::admissible(const std::vector<int>& s, CfMode mode) const {
  if (!conflict_free(s, mode)) return false;
  for (int x : s)
    if (!acceptable(x, s)) return false;
  return true;
}

FrameworkView abstract_view(const StructuredAF& saf) {
  FrameworkView view;
  view.saf = &saf;
  // Nodes ordered by stable id for byte-stable output.
  std::vector<std::pair<std::string, ArgId>> order;
  for (ArgId a : saf.universe) order.emplace_back(saf.args.arg(a).id, a);
  std::sort(order.begin(), order.end());
  std::map<ArgId, int> index;
  for (auto& [id, a] : order) {
    index[a] = static_cast<int>(view.node_arg.size());
    view.node_arg.push_back(a);
    view.node_id.push_back(id);
    view.node_conc.push_back(saf.args.arg(a).conc);
  }
  view.af.n = static_cast<int>(view.node_arg.size());
  for (const Attack& at : saf.attacks)
    view.af.attack_edges.emplace_back(index.at(at.attacker), index.at(at.target));
  for (const Defeat& d : saf.defeats)
    view.af.defeat_edges.emplace_back(index.at(d.attacker), index.at(d.target));
  view.af.freeze();
  return view;
}

namespace {

enum Lab : uint8_t { UNAS = 0, IN, OUT, UNDEC };

struct CompleteEnum {
  const AbstractAF& af;
  size_t max_ext;
  size_t max_steps;
  size_t steps = 0;
  std::vector<std::vector<int>> found;

  // Search state: a label per node plus a monotone may-not-be-IN flag.
  // UNDEC neighbors ban IN on their defeaters, which keeps OUT obligations
  // ("some defeater must become IN") tight.
  struct State {
    std::vector<Lab> lab;
    std::vector<uint8_t> no_in;
  };

  CompleteEnum(const AbstractAF& a, size_t m, size_t s) : af(a), max_ext(m), max_steps(s) {}

  // Returns false on contradiction. Unit rules per node:
  //  IN    -> not banned, every defeater OUT
  //  OUT   -> some defeater IN (forced when one viable candidate remains)
  //  UNDEC -> no defeater may be IN, some defeater UNDEC (forced when one
  //           candidate remains)
  bool propagate(State& st) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (++steps > max_steps)
        throw BudgetExceeded("labelling search budget exceeded");
      for (int x = 0; x < af.n; ++x) {
        int in = 0, undec = 0, unas = 0, viable = 0;
        for (int y : af.defeaters[x]) {
          switch (st.lab[y]) {
            case IN: ++in; break;
            case UNDEC: ++undec; break;
            case UNAS:
              ++unas;
              if (!st.no_in[y]) ++viable;
              break;
            default: break;
          }
        }
        switch (st.lab[x]) {
          case UNAS:
            if (in) {
              st.lab[x] = OUT;
              changed = true;
            } else if (undec + unas == 0) {
              if (st.no_in[x]) return false;  // acceptable but banned
              st.lab[x] = IN;
              changed = true;
            }
            break;
          case IN:
            if (st.no_in[x] || in || undec) return false;
            for (int y : af.defeaters[x])
              if (st.lab[y] == UNAS) {
                st.lab[y] = OUT;
                changed = true;
              }
            break;
          case OUT:
            if (in) break;
            if (viable == 0) return false;  // nothing can legalize out
            if (viable == 1)
              for (int y : af.defeaters[x])
                if (st.lab[y] == UNAS && !st.no_in[y]) {
                  st.lab[y] = IN;
                  changed = true;
                }
            break;
          case UNDEC:
            if (in) return false;
            for (int y : af.defeaters[x])
              if (!st.no_in[y]) {
                st.no_in[y] = 1;
                changed = true;
              }
            if (undec) break;
            if (unas == 0) return false;  // would be forced in
            if (unas == 1)
              for (int y : af.defeaters[x])
                if (st.lab[y] == UNAS) {
                  st.lab[y] = UNDEC;
                  changed = true;
                }
            break;
        }
      }
    }
    return true;
  }

  bool consistent_total(const std::vector<Lab>& lab) {
    for (int x = 0; x < af.n; ++x) {
      bool any_in = false, all_out = true, any_undec = false;
      for (int y : af.defeaters[x]) {
        if (lab[y] == IN) any_in = true;
        if (lab[y] != OUT) all_out = false;
        if (lab[y] == UNDEC) any_undec = true;
      }
      switch (lab[x]) {
        case IN:
          if (!all_out) return false;
          break;
        case OUT:
          if (!any_in) return false;
          break;
        case UNDEC:
          if (any_in || !any_undec) return false;
          break;
        default:
          return false;
      }
    }
    return true;
  }

  // An OUT node still lacking an IN defeater, with the fewest viable
  // candidates; branching over its candidates satisfies the tightest
  // pending obligation first.
  int pick_obligation(const State& st, std::vector<int>& candidates) {
    int best = -1;
    size_t best_width = SIZE_MAX;
    for (int x = 0; x < af.n; ++x) {
      if (st.lab[x] != OUT) continue;
      bool satisfied = false;
      std::vector<int> cand;
      for (int y : af.defeaters[x]) {
        if (st.lab[y] == IN) {
          satisfied = true;
          break;
        }
        if (st.lab[y] == UNAS && !st.no_in[y]) cand.push_back(y);
      }
      if (satisfied) continue;
      if (cand.size() < best_width) {
        best_width = cand.size();
        best = x;
        candidates = std::move(cand);
      }
    }
    return best;
  }

  int pick_node(const State& st) {
    int best = -1, best_score = -1;
    for (int x = 0; x < af.n; ++x) {
      if (st.lab[x] != UNAS) continue;
      int assigned = 0;
      for (int y : af.defeaters[x])
        if (st.lab[y] != UNAS) ++assigned;
      for (int y : af.defeated[x])
        if (st.lab[y] != UNAS) ++assigned;
      int degree = static_cast<int>(af.defeaters[x].size() + af.defeated[x].size());
      int score = 4 * assigned + degree + (st.no_in[x] ? 2 : 0);
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    return best;
  }

  void emit(const State& st) {
    if (!consistent_total(st.lab)) return;
    std::vector<int> ext;
    for (int x = 0; x < af.n; ++x)
      if (st.lab[x] == IN) ext.push_back(x);
    found.push_back(std::move(ext));
    if (found.size() > max_ext) throw BudgetExceeded("extension budget exceeded");
  }

  void search(State st) {
    if (!propagate(st)) return;

    std::vector<int> candidates;
    if (pick_obligation(st, candidates) >= 0) {
      // Exactly one of the candidates is IN; later branches ban the earlier
      // candidates, keeping the cases disjoint and exhaustive.
      State base = st;
      for (int c : candidates) {
        State next = base;
        next.lab[c] = IN;
        search(std::move(next));
        base.no_in[c] = 1;
      }
      return;
    }

    int pick = pick_node(st);
    if (pick < 0) {
      emit(st);
      return;
    }
    if (!st.no_in[pick]) {
      State next = st;
      next.lab[pick] = IN;
      search(std::move(next));
    }
    for (Lab l : {OUT, UNDEC}) {
      State next = st;
      next.lab[pick] = l;
      search(std::move(next));
    }
  }
};

std::vector<std::vector<int>> complete_extensions(const AbstractAF& af, size_t max_ext,
                                                  size_t max_steps) {
  CompleteEnum e(af, max_ext, max_steps);
  e.search({std::vector<Lab>(af.n, UNAS), std::vector<uint8_t>(af.n, 0)});
  std::sort(e.found.begin(), e.found.end());
  e.found.erase(std::unique(e.found.begin(), e.found.end()), e.found.end());
  return e.found;
}

std::vector<int> grounded_lfp(const AbstractAF& af) {
  std::vector<int> g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < af.n; ++x) {
      if (std::binary_search(g.begin(), g.end(), x)) continue;
      if (af.acceptable(x, g)) {
        g.insert(std::lower_bound(g.begin(), g.end(), x), x);
        changed = true;
      }
    }
  }
  return g;
}

void admissible_search(const AbstractAF& af, CfMode mode, int next, std::vector<int>& current,
                       std::vector<std::vector<int>>& out, size_t max_ext) {
  if (next == af.n) {
    if (af.admissible(current, mode)) {
      out.push_back(current);
      if (out.size() > max_ext) throw BudgetExceeded("extension budget exceeded");
    }
    return;
  }
  admissible_search(af, mode, next + 1, current, out, max_ext);
  // Prune on conflict with the current partial set.
  bool clash = false;
  if (mode == CfMode::Attack) {
    if (af.att[next][next]) clash = true;
    for (int x : current)
      if (af.att[x][next] || af.att[next][x]) {
        clash = true;
        break;
      }
  } else {
    auto hits = [&](int a, int b) {
      for (int y : af.defeated[a])
        if (y == b) return true;
      return false;
    };
    if (hits(next, next)) clash = true;
    for (int x : current)
      if (hits(x, next) || hits(next, x)) {
        clash = true;
        break;
      }
  }
  if (!clash) {
    current.push_back(next);
    admissible_search(af, mode, next + 1, current, out, max_ext);
    current.pop_back();
  }
}

std::vector<std::vector<int>> maximal_sets(const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> out;
  for (const auto& s : family) {
    bool maximal = true;
    for (const auto& t : family)
      if (&s != &t && s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> minimal_sets(const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> out;
  for (const auto& s : family) {
    bool minimal = true;
    for (const auto& t : family)
      if (&s != &t && s != t && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

bool covers_outside(const AbstractAF& af, const std::vector<int>& s) {
  for (int y = 0; y < af.n; ++y) {
    if (std::binary_search(s.begin(), s.end(), y)) continue;
    bool hit = false;
    for (int x : af.defeaters[y])
      if (std::binary_search(s.begin(), s.end(), x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

ExtensionSet enumerate_extensions(const AbstractAF& af, Semantics s, CfMode mode,
                                  const SolveBudget& budget) {
  ExtensionSet out{s, mode, {}};
  if (s == Semantics::Admissible) {
    if (af.n > budget.max_nodes_admissible)
      throw BudgetExceeded("admissible enumeration limited to " +
                           std::to_string(budget.max_nodes_admissible) + " nodes");
    std::vector<int> current;
    admissible_search(af, mode, 0, current, out.extensions, budget.max_extensions);
    std::sort(out.extensions.begin(), out.extensions.end());
    return out;
  }
  if (af.n > budget.max_nodes)
    throw BudgetExceeded("node budget exceeded (" + std::to_string(af.n) + " nodes)");

  std::vector<std::vector<int>> complete =
      complete_extensions(af, budget.max_extensions, budget.max_search_steps);
  if (mode == CfMode::Attack) {
    std::vector<std::vector<int>> kept;
    for (auto& e : complete)
      if (af.conflict_free(e, CfMode::Attack)) kept.push_back(e);
    complete = std::move(kept);
  }
  switch (s) {
    case Semantics::Complete:
      out.extensions = complete;
      break;
    case Semantics::Grounded:
      out.extensions = minimal_sets(complete);
      break;
    case Semantics::Preferred:
      out.extensions = maximal_sets(complete);
      break;
    case Semantics::Stable:
      for (auto& e : maximal_sets(complete))
        if (covers_outside(af, e)) out.extensions.push_back(e);
      break;
    default:
      break;
  }
  std::sort(out.extensions.begin(), out.extensions.end());
  return out;
}

ExtensionSet grounded_extension(const AbstractAF& af, CfMode mode) {
  ExtensionSet out{Semantics::Grounded, mode, {}};
  std::vector<int> g = grounded_lfp(af);
  if (mode == CfMode::Defeat || af.conflict_free(g, CfMode::Attack)) out.extensions.push_back(g);
  return out;
}

std::map<std::string, JustifiedStatus> justified_conclusions(
    const ExtensionSet& exts, const std::vector<std::string>& node_conc_display) {
  std::map<std::string, JustifiedStatus> out;
  for (const std::string& c : node_conc_display) out[c];  // every conclusion appears
  for (const auto& ext : exts.extensions)
    for (int x : ext) out[node_conc_display[x]].credulous = true;
  if (!exts.extensions.empty()) {
    for (auto& [conc, st] : out) {
      bool everywhere = true;
      for (const auto& ext : exts.extensions) {
        bool here = false;
        for (int x : ext)
          if (node_conc_display[x] == conc) {
            here = true;
            break;
          }
        if (!here) {
          everywhere = false;
          break;
        }
      }
      st.sceptical = everywhere;
    }
  }
  return out;
}

CompareResult compare_att_def(const AbstractAF& af, Semantics s, const SolveBudget& budget) {
  ExtensionSet att = s == Semantics::Grounded && af.n > budget.max_nodes
                         ? grounded_extension(af, CfMode::Attack)
                         : enumerate_extensions(af, s, CfMode::Attack, budget);
  ExtensionSet def = s == Semantics::Grounded && af.n > budget.max_nodes
                         ? grounded_extension(af, CfMode::Defeat)
                         : enumerate_extensions(af, s, CfMode::Defeat, budget);
  CompareResult res;
  if (att.extensions == def.extensions) return res;
  res.equal = false;
  // First extension present on one side only.
  for (const auto& e : def.extensions)
    if (std::find(att.extensions.begin(), att.extensions.end(), e) == att.extensions.end()) {
      res.witness = "def-only extension of size " + std::to_string(e.size());
      return res;
    }
  for (const auto& e : att.extensions)
    if (std::find(def.extensions.begin(), def.extensions.end(), e) == def.extensions.end()) {
      res.witness = "att-only extension of size " + std::to_string(e.size());
      return res;
    }
  return res;
}

CompareResult att_def_equivalent_all(const AbstractAF& af, const SolveBudget& budget) {
  CompareResult res;
  for (const auto& e :
       complete_extensions(af, budget.max_extensions, budget.max_search_steps)) {
    if (!af.conflict_free(e, CfMode::Attack)) {
      res.equal = false;
      res.witness = "def-complete extension of size " + std::to_string(e.size()) +
                    " is not attack conflict free";
      return res;
    }
  }
  return res;
}

}  // namespace aspic
