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

#include "aspic/postulate.hpp"

namespace aspic {

namespace {
std::vector<FormulaId> conclusions_of(const ArgumentSet& set, const std::vector<ArgId>& ext) {
  std::vector<FormulaId> out;
  for (ArgId a : ext) sorted_insert(out, set.arg(a).conc);
  return out;
}
}  // namespace

bool check_subarg_closure(const ArgumentSet& set, const std::vector<ArgId>& extension,
                          std::vector<std::string>* witnesses) {
  bool ok = true;
  for (ArgId a : extension)
    for (ArgId s : set.arg(a).sub)
      if (std::find(extension.begin(), extension.end(), s) == extension.end()) {
        ok = false;
        if (witnesses && witnesses->size() < 5)
          witnesses->push_back("sub-argument " + set.describe(s) + " of " + set.describe(a) +
                               " missing from extension");
      }
  return ok;
}

bool check_strict_closure(const ArgumentSet& set, const std::vector<ArgId>& universe,
                          const std::vector<ArgId>& extension,
                          std::vector<std::string>* witnesses,
                          std::vector<std::string>* budget_gaps) {
  const Theory& t = set.theory();
  std::vector<FormulaId> concs = conclusions_of(set, extension);
  std::vector<FormulaId> closed = t.closure_under_strict(concs);
  std::vector<FormulaId> realizable;
  for (ArgId a : universe) sorted_insert(realizable, set.arg(a).conc);

  bool ok = true;
  for (FormulaId f : closed) {
    if (sorted_contains(concs, f)) continue;
    if (!sorted_contains(realizable, f)) {
      if (budget_gaps && budget_gaps->size() < 5)
        budget_gaps->push_back("closure demands '" + t.lang.display(f) +
                               "' but no built argument concludes it");
      continue;
    }
    ok = false;
    if (witnesses && witnesses->size() < 5)
      witnesses->push_back("closure demands '" + t.lang.display(f) +
                           "' but the extension holds no argument for it");
  }
  return ok;
}

bool check_direct_consistency(const ArgumentSet& set, const std::vector<ArgId>& extension,
                              std::vector<std::string>* witnesses) {
  const Theory& t = set.theory();
  std::vector<FormulaId> concs = conclusions_of(set, extension);
  if (t.is_directly_consistent(concs)) return true;
  if (witnesses)
    for (FormulaId psi : concs)
      for (FormulaId phi : t.con.cons_of(psi))
        if (sorted_contains(concs, phi) && witnesses->size() < 5)
          witnesses->push_back("'" + t.lang.display(phi) + "' conflicts with '" +
                               t.lang.display(psi) + "'");
  return false;
}

bool check_indirect_consistency(const ArgumentSet& set, const std::vector<ArgId>& extension,
                                std::vector<std::string>* witnesses) {
  const Theory& t = set.theory();
  std::vector<FormulaId> closed = t.closure_under_strict(conclusions_of(set, extension));
  if (t.is_directly_consistent(closed)) return true;
  if (witnesses)
    for (FormulaId psi : closed)
      for (FormulaId phi : t.con.cons_of(psi))
        if (sorted_contains(closed, phi) && witnesses->size() < 5)
          witnesses->push_back("closure holds both '" + t.lang.display(phi) + "' and '" +
                               t.lang.display(psi) + "'");
  return false;
}

PostulateResult check_postulates(const StructuredAF& saf, const std::vector<ArgId>& extension) {
  PostulateResult res;
  res.extension = extension;
  res.subarg_closure = check_subarg_closure(saf.args, extension, &res.subarg_witnesses);
  res.strict_closure = check_strict_closure(saf.args, saf.universe, extension,
                                            &res.strict_closure_witnesses,
                                            &res.closure_budget_gaps);
  res.direct_consistency = check_direct_consistency(saf.args, extension, &res.direct_witnesses);
  res.indirect_consistency =
      check_indirect_consistency(saf.args, extension, &res.indirect_witnesses);
  return res;
}

PostulateReport check_postulates_all(const StructuredAF& saf, Semantics semantics, CfMode cf_mode,
                                     const SolveBudget& budget) {
  FrameworkView view = abstract_view(saf);
  ExtensionSet exts = enumerate_extensions(view.af, semantics, cf_mode, budget);
  PostulateReport rep{semantics, cf_mode, {}};
  for (const auto& ext : exts.extensions) {
    std::vector<ArgId> ids;
    for (int x : ext) ids.push_back(view.node_arg[x]);
    rep.per_extension.push_back(check_postulates(saf, ids));
  }
  return rep;
}

}  // namespace aspic
