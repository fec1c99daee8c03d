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
#include <optional>
#include <string>
#include <vector>

#include "aspic/saf.hpp"

namespace aspic {

enum class Semantics { Admissible, Complete, Grounded, Preferred, Stable };
enum class CfMode { Attack, Defeat };

const char* semantics_name(Semantics s);
const char* cf_mode_name(CfMode m);
std::optional<Semantics> semantics_from_name(const std::string& s);

/// The abstract frame: nodes 0..n-1, defeat edges (acceptability always runs
/// over these) and attack edges (a superset, used when conflict-freeness is
/// attack-based).
struct AbstractAF {
  int n = 0;
  std::vector<std::pair<int, int>> defeat_edges;
  std::vector<std::pair<int, int>> attack_edges;

  std::vector<std::vector<int>> defeaters;   // defeaters[x] = {y : y defeats x}
  std::vector<std::vector<int>> defeated;    // defeated[x] = {y : x defeats y}
  std::vector<std::vector<uint8_t>> att;     // attack adjacency matrix

  void freeze();  // builds the indexes; edges are deduplicated
  bool conflict_free(const std::vector<int>& s, CfMode mode) const;
  bool acceptable(int x, const std::vector<int>& s) const;
  bool admissible(const std::vector<int>& s, CfMode mode) const;
};

/// Ties an abstract frame back to the structured one.
struct FrameworkView {
  AbstractAF af;
  std::vector<ArgId> node_arg;           // node index -> pool id
  std::vector<std::string> node_id;      // node index -> stable id
  std::vector<FormulaId> node_conc;
  const StructuredAF* saf = nullptr;
};

FrameworkView abstract_view(const StructuredAF& saf);

struct SolveBudget {
  int max_nodes = 2048;
  int max_nodes_admissible = 24;
  size_t max_extensions = 200000;
  size_t max_search_steps = 20000000;  // propagation passes across the search
};

struct ExtensionSet {
  Semantics semantics;
  CfMode cf_mode;
  std::vector<std::vector<int>> extensions;  // each sorted; family sorted
};

/// Enumerates extensions of the frame under the chosen semantics and
/// conflict-freeness. Complete extensions come from an {in,out,undec}
/// labelling search with unit propagation; preferred/grounded/stable are
/// derived; admissible is a separate pruned subset search. Throws
/// BudgetExceeded over the node bounds.
ExtensionSet enumerate_extensions(const AbstractAF& af, Semantics s, CfMode mode,
                                  const SolveBudget& budget = {});

/// The grounded extension via the least fixpoint of the characteristic
/// function. Under attack conflict-freeness the fixpoint may fail to be
/// conflict free, in which case there is no grounded extension.
ExtensionSet grounded_extension(const AbstractAF& af, CfMode mode);

struct JustifiedStatus {
  bool credulous = false;
  bool sceptical = false;
};

/// Per-conclusion justification. Sceptical follows the per-extension
/// ∃-argument reading: every extension holds some argument concluding φ.
/// An empty extension family justifies nothing.
std::map<std::string, JustifiedStatus> justified_conclusions(
    const ExtensionSet& exts, const std::vector<std::string>& node_conc_display);

struct CompareResult {
  bool equal = true;
  std::string witness;  // first differing extension, rendered
};

/// Enumerates both att- and def-mode families for the semantics and compares.
CompareResult compare_att_def(const AbstractAF& af, Semantics s,
                              const SolveBudget& budget = {});

/// Exact shortcut for full five-semantics equivalence: the att- and def-mode
/// families coincide for admissible, complete, grounded, preferred and stable
/// iff every def-complete extension is attack conflict free.
CompareResult att_def_equivalent_all(const AbstractAF& af, const SolveBudget& budget = {});

}  // namespace aspic
