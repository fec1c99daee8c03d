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

#include "aspic/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace aspic {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered rule_json(const Theory& t, RuleId id) {
  const Rule& r = t.rule(id);
  ordered out;
  out["kind"] = r.strict() ? "strict" : "defeasible";
  std::vector<std::string> ante;
  for (FormulaId f : r.antecedents) ante.push_back(t.lang.display(f));
  out["ante"] = ante;
  out["cons"] = t.lang.display(r.consequent);
  if (r.name) out["name"] = t.lang.display(*r.name);
  return out;
}

std::vector<std::string> displays(const Theory& t, const std::vector<FormulaId>& fs) {
  std::vector<std::string> out;
  for (FormulaId f : fs) out.push_back(t.lang.display(f));
  std::sort(out.begin(), out.end());
  return out;
}

// Pool order is construction order; output keys on stable ids.
std::vector<ArgId> by_id(const StructuredAF& saf) {
  std::vector<ArgId> order = saf.universe;
  std::sort(order.begin(), order.end(), [&](ArgId a, ArgId b) {
    return saf.args.arg(a).id < saf.args.arg(b).id;
  });
  return order;
}

}  // namespace

std::string arguments_json(const StructuredAF& saf) {
  const Theory& t = *saf.theory;
  ordered out = ordered::array();
  for (ArgId a : by_id(saf)) {
    const Argument& arg = saf.args.arg(a);
    ordered j;
    j["id"] = arg.id;
    j["conc"] = t.lang.display(arg.conc);
    j["prem"] = displays(t, arg.prem);
    j["prem_p"] = displays(t, arg.prem_p);
    ordered rules = ordered::array();
    for (RuleId r : arg.rules) rules.push_back(rule_json(t, r));
    j["rules"] = rules;
    j["top_rule"] = arg.rule ? ordered(rule_json(t, *arg.rule)) : ordered(nullptr);
    std::vector<std::string> subs;
    for (ArgId s : arg.sub) subs.push_back(saf.args.arg(s).id);
    std::sort(subs.begin(), subs.end());
    j["sub_ids"] = subs;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string attacks_json(const StructuredAF& saf) {
  ordered out = ordered::array();
  std::vector<Attack> attacks = saf.attacks;
  std::sort(attacks.begin(), attacks.end(), [&](const Attack& x, const Attack& y) {
    auto key = [&](const Attack& at) {
      return std::tuple(saf.args.arg(at.attacker).id, saf.args.arg(at.target).id,
                        saf.args.arg(at.on).id, static_cast<int>(at.kind));
    };
    return key(x) < key(y);
  });
  for (const Attack& at : attacks) {
    ordered j;
    j["attacker"] = saf.args.arg(at.attacker).id;
    j["target"] = saf.args.arg(at.target).id;
    j["on"] = saf.args.arg(at.on).id;
    j["kind"] = attack_kind_name(at.kind);
    j["preference_dependent"] = at.preference_dependent;
    bool defeats = false;
    for (const Defeat& d : saf.defeats)
      if (d.attacker == at.attacker && d.target == at.target && d.on == at.on) defeats = true;
    j["defeats"] = defeats;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string solve_json(const StructuredAF& saf, const FrameworkView& view,
                       const ExtensionSet& exts,
                       const std::vector<std::pair<std::string, std::string>>& extra_meta) {
  const Theory& t = *saf.theory;
  ordered out;
  out["semantics"] = semantics_name(exts.semantics);
  out["cf_mode"] = cf_mode_name(exts.cf_mode);

  std::vector<std::vector<std::string>> extensions;
  for (const auto& ext : exts.extensions) {
    std::vector<std::string> ids;
    for (int x : ext) ids.push_back(view.node_id[x]);
    std::sort(ids.begin(), ids.end());
    extensions.push_back(ids);
  }
  std::sort(extensions.begin(), extensions.end());
  out["extensions"] = extensions;

  std::vector<std::string> concs;
  for (FormulaId f : view.node_conc) concs.push_back(t.lang.display(f));
  auto justified = justified_conclusions(exts, concs);
  ordered jmap;
  for (auto& [conc, st] : justified) {
    ordered entry;
    entry["credulous"] = st.credulous;
    entry["sceptical"] = st.sceptical;
    jmap[conc] = entry;
  }
  out["justified"] = jmap;

  ordered meta;
  meta["mode"] = saf.mode == FrameworkMode::CSaf ? "c-saf" : "saf";
  meta["link"] = saf.ordering.link == LinkPrinciple::LastLink ? "last" : "weakest";
  meta["setcomp"] = saf.ordering.setcomp == SetComparison::Elitist ? "eli" : "dem";
  meta["max_depth"] = saf.limits.max_depth;
  meta["max_arguments"] = saf.limits.max_arguments;
  meta["distinct_conclusions_per_path"] = saf.limits.distinct_conclusions_per_path;
  meta["exact_universe"] = saf.exact_universe;
  meta["pruned_by_path"] = saf.pruned_by_path;
  meta["pruned_by_depth"] = saf.pruned_by_depth;
  meta["argument_count"] = saf.universe.size();
  for (const auto& [key, value] : extra_meta) meta[key] = value;
  out["meta"] = meta;
  return out.dump(2) + "\n";
}

std::string arguments_text(const StructuredAF& saf) {
  const Theory& t = *saf.theory;
  std::string out;
  for (ArgId a : by_id(saf)) {
    const Argument& arg = saf.args.arg(a);
    out += arg.id + "  " + t.lang.display(arg.conc) + "  " + saf.args.describe(a) + "\n";
  }
  return out;
}

std::string attacks_text(const StructuredAF& saf) {
  std::string out;
  std::vector<Attack> attacks = saf.attacks;
  std::sort(attacks.begin(), attacks.end(), [&](const Attack& x, const Attack& y) {
    return std::pair(saf.args.arg(x.attacker).id, saf.args.arg(x.target).id) <
           std::pair(saf.args.arg(y.attacker).id, saf.args.arg(y.target).id);
  });
  for (const Attack& at : attacks)
    out += saf.args.describe(at.attacker) + "  " + attack_kind_name(at.kind) + "s  " +
           saf.args.describe(at.target) + "  on  " + saf.args.describe(at.on) + "\n";
  return out;
}

std::string solve_text(const StructuredAF& saf, const FrameworkView& view,
                       const ExtensionSet& exts) {
  std::string out = std::string(semantics_name(exts.semantics)) + " (" +
                    cf_mode_name(exts.cf_mode) + "): " +
                    std::to_string(exts.extensions.size()) + " extension(s)\n";
  std::vector<std::vector<std::string>> rendered;
  for (const auto& ext : exts.extensions) {
    std::vector<std::string> one;
    for (int x : ext) one.push_back(saf.args.describe(view.node_arg[x]));
    std::sort(one.begin(), one.end());
    rendered.push_back(one);
  }
  std::sort(rendered.begin(), rendered.end());
  for (const auto& one : rendered) {
    out += "  {";
    for (size_t i = 0; i < one.size(); ++i) out += (i ? ", " : " ") + one[i];
    out += " }\n";
  }
  return out;
}

std::string well_defined_json(const WellDefinedReport& rep, FrameworkMode mode) {
  ordered out;
  out["axiom_consistent"] = rep.axiom_consistent;
  out["well_formed"] = rep.well_formed;
  out["transposition_closed"] = rep.transposition_closed;
  out["contraposition_sampled"] = rep.contraposition_sampled;
  out["contraposition_samples"] = rep.contraposition_samples;
  if (mode == FrameworkMode::CSaf) {
    out["c_classical_sampled"] = rep.c_classical_sampled;
    out["c_classical_samples"] = rep.c_classical_samples;
  }
  auto witness_array = [](const std::vector<WellDefinedWitness>& ws) {
    ordered arr = ordered::array();
    for (const auto& w : ws) arr.push_back(w.what);
    return arr;
  };
  ordered witnesses;
  witnesses["axiom_consistent"] = witness_array(rep.axiom_witnesses);
  witnesses["well_formed"] = witness_array(rep.well_formed_witnesses);
  witnesses["transposition_closed"] = witness_array(rep.transposition_witnesses);
  witnesses["contraposition_sampled"] = witness_array(rep.contraposition_witnesses);
  if (mode == FrameworkMode::CSaf)
    witnesses["c_classical_sampled"] = witness_array(rep.c_classical_witnesses);
  out["witnesses"] = witnesses;
  out["missing_contradictory"] = rep.missing_contradictory;
  out["self_incompatible"] = rep.self_incompatible;
  out["well_defined"] = rep.syntactically_well_defined();
  return out.dump(2) + "\n";
}

std::string postulates_json(const PostulateReport& rep, const ArgumentSet& args) {
  ordered out;
  out["semantics"] = semantics_name(rep.semantics);
  out["cf_mode"] = cf_mode_name(rep.cf_mode);
  out["ok"] = rep.all_ok();
  ordered exts = ordered::array();
  for (const auto& r : rep.per_extension) {
    ordered j;
    std::vector<std::string> ids;
    for (ArgId a : r.extension) ids.push_back(args.arg(a).id);
    std::sort(ids.begin(), ids.end());
    j["ids"] = ids;
    j["subarg_closure"] = r.subarg_closure;
    j["strict_closure"] = r.strict_closure;
    j["direct_consistency"] = r.direct_consistency;
    j["indirect_consistency"] = r.indirect_consistency;
    ordered witnesses;
    witnesses["subarg_closure"] = r.subarg_witnesses;
    witnesses["strict_closure"] = r.strict_closure_witnesses;
    witnesses["direct_consistency"] = r.direct_witnesses;
    witnesses["indirect_consistency"] = r.indirect_witnesses;
    j["witnesses"] = witnesses;
    j["closure_budget_gaps"] = r.closure_budget_gaps;
    exts.push_back(j);
  }
  out["extensions"] = exts;
  return out.dump(2) + "\n";
}

}  // namespace aspic
