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

#include "aspic/classical.hpp"

#include <algorithm>
#include <cctype>

namespace aspic::classical {

PF PropPool::put(PNode n) {
  std::string key;
  switch (n.op) {
    case Op::Atom: key = "a:" + n.atom; break;
    case Op::Not: key = "n:" + std::to_string(n.a); break;
    case Op::And: key = "c:" + std::to_string(n.a) + "," + std::to_string(n.b); break;
    case Op::Or: key = "d:" + std::to_string(n.a) + "," + std::to_string(n.b); break;
    case Op::Implies: key = "i:" + std::to_string(n.a) + "," + std::to_string(n.b); break;
  }
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  PF id = static_cast<PF>(nodes_.size());
  index_.emplace(std::move(key), id);
  nodes_.push_back(std::move(n));
  return id;
}

PF PropPool::atom(const std::string& name) { return put({Op::Atom, -1, -1, name}); }
PF PropPool::mk_not(PF x) { return put({Op::Not, x, -1, ""}); }
PF PropPool::mk_and(PF a, PF b) { return put({Op::And, a, b, ""}); }
PF PropPool::mk_or(PF a, PF b) { return put({Op::Or, a, b, ""}); }
PF PropPool::mk_implies(PF a, PF b) { return put({Op::Implies, a, b, ""}); }

PF PropPool::neg(PF x) {
  if (nodes_.at(x).op == Op::Not) return nodes_[x].a;
  return mk_not(x);
}

namespace {
struct PParser {
  PropPool& pool;
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("formula parse error at offset " + std::to_string(pos) + ": " + what + " in '" +
                text + "'");
  }

  // implies := or ('>' implies)?   (right associative)
  PF implies() {
    PF left = disj();
    if (eat('>')) return pool.mk_implies(left, implies());
    return left;
  }
  PF disj() {
    PF left = conj();
    while (eat('|')) left = pool.mk_or(left, conj());
    return left;
  }
  PF conj() {
    PF left = unary();
    while (eat('&')) left = pool.mk_and(left, unary());
    return left;
  }
  PF unary() {
    skip();
    if (eat('-')) return pool.mk_not(unary());
    if (eat('(')) {
      PF inner = implies();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    skip();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an atom, '-' or '('");
    return pool.atom(text.substr(start, pos - start));
  }
};
}  // namespace

PF PropPool::parse(const std::string& text) {
  PParser p{*this, text};
  PF out = p.implies();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

std::string PropPool::to_string(PF x) const {
  const PNode& n = nodes_.at(x);
  switch (n.op) {
    case Op::Atom: return n.atom;
    case Op::Not: {
      const PNode& c = nodes_.at(n.a);
      if (c.op == Op::Atom) return "-" + c.atom;
      return "-(" + to_string(n.a) + ")";
    }
    case Op::And: return "(" + to_string(n.a) + " & " + to_string(n.b) + ")";
    case Op::Or: return "(" + to_string(n.a) + " | " + to_string(n.b) + ")";
    case Op::Implies: return "(" + to_string(n.a) + " > " + to_string(n.b) + ")";
  }
  return "?";
}

void PropPool::collect_atoms(PF x, std::set<std::string>& out) const {
  const PNode& n = nodes_.at(x);
  if (n.op == Op::Atom) {
    out.insert(n.atom);
    return;
  }
  if (n.a >= 0) collect_atoms(n.a, out);
  if (n.b >= 0) collect_atoms(n.b, out);
}

namespace {
bool eval(const PropPool& pool, PF x, const std::map<std::string, bool>& val) {
  const PNode& n = pool.node(x);
  switch (n.op) {
    case Op::Atom: return val.at(n.atom);
    case Op::Not: return !eval(pool, n.a, val);
    case Op::And: return eval(pool, n.a, val) && eval(pool, n.b, val);
    case Op::Or: return eval(pool, n.a, val) || eval(pool, n.b, val);
    case Op::Implies: return !eval(pool, n.a, val) || eval(pool, n.b, val);
  }
  return false;
}

std::vector<std::string> atom_list(const PropPool& pool, const std::vector<PF>& s,
                                   std::optional<PF> extra) {
  std::set<std::string> atoms;
  for (PF f : s) pool.collect_atoms(f, atoms);
  if (extra) pool.collect_atoms(*extra, atoms);
  if (atoms.size() > static_cast<size_t>(kAtomBudget))
    throw AtomBudget("entailment limited to " + std::to_string(kAtomBudget) + " atoms, got " +
                     std::to_string(atoms.size()));
  return {atoms.begin(), atoms.end()};
}
}  // namespace

bool entails(const PropPool& pool, const std::vector<PF>& s, PF phi) {
  std::vector<std::string> atoms = atom_list(pool, s, phi);
  uint64_t count = 1ull << atoms.size();
  std::map<std::string, bool> val;
  for (uint64_t mask = 0; mask < count; ++mask) {
    for (size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = (mask >> i) & 1;
    bool all = true;
    for (PF f : s)
      if (!eval(pool, f, val)) {
        all = false;
        break;
      }
    if (all && !eval(pool, phi, val)) return false;
  }
  return true;
}

bool consistent(const PropPool& pool, const std::vector<PF>& s) {
  std::vector<std::string> atoms = atom_list(pool, s, std::nullopt);
  uint64_t count = 1ull << atoms.size();
  std::map<std::string, bool> val;
  for (uint64_t mask = 0; mask < count; ++mask) {
    for (size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = (mask >> i) & 1;
    bool all = true;
    for (PF f : s)
      if (!eval(pool, f, val)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

CConsistencyOracle classical_c_oracle(PropPool& pool, const Language& lang) {
  return [&pool, &lang](const std::vector<FormulaId>& prem) {
    std::vector<PF> fs;
    for (FormulaId f : prem) fs.push_back(pool.parse(lang.display(f)));
    try {
      return consistent(pool, fs);
    } catch (const AtomBudget& e) {
      throw OracleBudget(e.what());
    }
  };
}

void StratifiedTheory::validate(const PropPool& pool) const {
  std::set<PF> seen;
  for (const auto& stratum : strata)
    for (PF f : stratum)
      if (!seen.insert(f).second)
        throw IllFormedTheory("formula '" + pool.to_string(f) + "' appears in two strata");
}

std::vector<PF> default_claims(PropPool& pool, const std::vector<PF>& sigma,
                               const std::vector<PF>& user_claims) {
  std::vector<PF> out;
  auto add = [&out](PF f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  for (PF f : sigma) {
    add(f);
    add(pool.neg(f));
  }
  for (PF f : user_claims) add(f);
  if (out.empty()) throw ClaimsEmpty("empty claims universe");
  return out;
}

namespace {

struct SupportEnum {
  // Minimal (or all) consistent supports X ⊆ Σ with X ⊨ claim.
  static std::vector<std::vector<PF>> supports(const PropPool& pool, const std::vector<PF>& sigma,
                                               PF claim, bool minimal_only, size_t budget) {
    size_t n = sigma.size();
    if ((1ull << n) > budget)
      throw BudgetExceeded("support enumeration over " + std::to_string(n) + " premises");
    std::vector<std::vector<PF>> found;
    // Masks ordered by popcount so subset-minimality is a scan over found.
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::vector<uint32_t> found_masks;
    for (uint32_t m : masks) {
      if (minimal_only) {
        bool covered = false;
        for (uint32_t fm : found_masks)
          if ((fm & m) == fm) {
            covered = true;
            break;
          }
        if (covered) continue;
      }
      std::vector<PF> x;
      for (size_t i = 0; i < n; ++i)
        if ((m >> i) & 1) x.push_back(sigma[i]);
      if (!consistent(pool, x) || !entails(pool, x, claim)) continue;
      found.push_back(std::move(x));
      found_masks.push_back(m);
    }
    return found;
  }
};

}  // namespace

std::optional<ArgId> ClassicalFrame::find_argument(const std::vector<PF>& support,
                                                   PF claim) const {
  std::vector<FormulaId> want;
  for (PF f : support) sorted_insert(want, formula_of.at(f));
  auto it = formula_of.find(claim);
  if (it == formula_of.end()) return std::nullopt;
  for (ArgId a : saf.universe) {
    const Argument& arg = saf.args.arg(a);
    if (arg.conc == it->second && arg.prem == want) return a;
  }
  return std::nullopt;
}

ClassicalFrame build_classical_csaf(PropPool pool_in, const std::vector<PF>& sigma,
                                    const PremisePrefs& prefs, const std::vector<PF>& user_claims,
                                    const ClassicalOptions& opts) {
  ClassicalFrame frame;
  frame.pool = std::move(pool_in);
  PropPool& pool = frame.pool;
  frame.sigma = sigma;
  frame.claims = default_claims(pool, sigma, user_claims);

  auto theory = std::make_shared<Theory>();
  auto fid = [&](PF f) -> FormulaId {
    auto it = frame.formula_of.find(f);
    if (it != frame.formula_of.end()) return it->second;
    FormulaId id = theory->intern_opaque(pool.to_string(f));
    frame.formula_of.emplace(f, id);
    return id;
  };

  for (PF s : sigma) theory->add_premise(fid(s));
  for (auto& [a, b] : prefs) {
    fid(a);
    fid(b);
  }

  // Supports per claim; arguments are the (X, p) pairs.
  struct PendingArg {
    std::vector<PF> support;
    PF claim;
  };
  std::vector<PendingArg> pending;
  for (PF claim : frame.claims) {
    for (auto& x :
         SupportEnum::supports(pool, sigma, claim, opts.premise_minimal,
                               opts.max_support_subsets))
      pending.push_back({x, claim});
  }

  // Materialize the strict rule instances behind non-premise arguments, pair
  // every formula with its designated negation, then build the pool.
  for (auto& p : pending) {
    fid(p.claim);
    for (PF s : p.support) fid(s);
  }
  for (auto& [f, id] : frame.formula_of) {
    FormulaId nid = fid(pool.neg(f));
    theory->con.declare(nid, id);
    theory->con.declare(id, nid);
  }
  for (auto& [a, b] : prefs) theory->add_premise_pref(frame.formula_of.at(a),
                                                      frame.formula_of.at(b));
  std::vector<std::pair<RuleId, PendingArg*>> apps;
  for (auto& p : pending) {
    bool is_premise = p.support.size() == 1 && p.support[0] == p.claim;
    if (is_premise) continue;
    std::vector<FormulaId> ante;
    for (PF s : p.support) ante.push_back(frame.formula_of.at(s));
    std::sort(ante.begin(), ante.end());
    apps.emplace_back(theory->add_strict(ante, frame.formula_of.at(p.claim)), &p);
  }
  theory->finalize();

  ArgumentSet args(theory.get());
  std::vector<ArgId> universe;
  std::map<FormulaId, ArgId> premise_arg;
  for (PF s : sigma) {
    if (!consistent(pool, {s})) continue;  // c-SAF keeps consistent supports only
    ArgId a = args.add_premise(frame.formula_of.at(s));
    premise_arg[frame.formula_of.at(s)] = a;
    universe.push_back(a);
  }
  for (auto& [rule, p] : apps) {
    std::vector<ArgId> children;
    bool ok = true;
    for (FormulaId ante : theory->rule(rule).antecedents) {
      auto it = premise_arg.find(ante);
      if (it == premise_arg.end()) {
        ok = false;
        break;
      }
      children.push_back(it->second);
    }
    if (ok) universe.push_back(args.add_rule_app(rule, children));
  }

  // Premise-directed attacks per the chosen variant.
  std::vector<Attack> attacks;
  for (ArgId a : universe) {
    PF conc = -1;
    for (auto& [f, id] : frame.formula_of)
      if (id == args.arg(a).conc) conc = f;
    for (auto& [pf, id] : frame.formula_of) {
      auto it = premise_arg.find(id);
      if (it == premise_arg.end()) continue;
      bool hits = false;
      switch (opts.variant) {
        case AttackVariant::Undermine:
          hits = entails(pool, {conc}, pool.neg(pf));
          break;
        case AttackVariant::DirectUndercut:
          hits = entails(pool, {conc}, pool.neg(pf)) && entails(pool, {pool.neg(pf)}, conc);
          break;
        case AttackVariant::Syntactic:
          hits = conc == pool.neg(pf);
          break;
      }
      if (!hits) continue;
      for (ArgId target : universe)
        if (sorted_contains(args.arg(target).sub, it->second))
          attacks.push_back({a, target, it->second, AttackKind::Undermine, true});
    }
  }
  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());

  LinkOrdering ord(args, opts.ordering.link, opts.ordering.setcomp, theory->rule_preorder,
                   theory->premise_preorder);
  std::vector<Defeat> defeats = compute_defeats(attacks, ord);

  frame.saf = StructuredAF{theory,
                           std::move(args),
                           std::move(universe),
                           std::move(attacks),
                           std::move(defeats),
                           opts.ordering,
                           FrameworkMode::CSaf,
                           BuildLimits{},
                           true,
                           0,
                           0,
                           WellDefinedReport{}};
  frame.theory = theory;
  return frame;
}

namespace {
PremisePrefs strata_prefs(const StratifiedTheory& strata) {
  PremisePrefs prefs;
  for (size_t i = 0; i < strata.strata.size(); ++i)
    for (size_t j = 0; j < strata.strata.size(); ++j)
      if (i >= j)  // α ∈ Γi, β ∈ Γj, i ≥ j  ⇒  α ≤' β
        for (PF a : strata.strata[i])
          for (PF b : strata.strata[j]) prefs.emplace_back(a, b);
  return prefs;
}

std::vector<PF> strata_sigma(const StratifiedTheory& strata) {
  std::vector<PF> sigma;
  for (const auto& s : strata.strata) sigma.insert(sigma.end(), s.begin(), s.end());
  return sigma;
}
}  // namespace

ClassicalFrame build_classical_csaf(PropPool pool, const StratifiedTheory& strata,
                                    const std::vector<PF>& user_claims,
                                    const ClassicalOptions& opts) {
  strata.validate(pool);
  return build_classical_csaf(std::move(pool), strata_sigma(strata), strata_prefs(strata),
                              user_claims, opts);
}

CorrespondenceResult verify_ps_correspondence(const PropPool& pool_in,
                                              const StratifiedTheory& strata,
                                              const std::vector<PF>& user_claims,
                                              LinkPrinciple link) {
  ClassicalOptions opts;
  opts.ordering = {link, SetComparison::Elitist};
  ClassicalFrame frame = build_classical_csaf(pool_in, strata, user_claims, opts);
  const PropPool& pool = frame.pool;

  FrameworkView view = abstract_view(frame.saf);
  ExtensionSet stable = enumerate_extensions(view.af, Semantics::Stable, CfMode::Attack);

  std::vector<std::vector<PF>> subtheories = ps::preferred_subtheories(pool, strata);
  auto canon = [&](std::vector<PF> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<PF>> canon_ps;
  for (auto& s : subtheories) canon_ps.push_back(canon(s));
  std::sort(canon_ps.begin(), canon_ps.end());

  CorrespondenceResult res;
  res.stable_count = stable.extensions.size();
  res.subtheory_count = canon_ps.size();

  // Direction 1: the premise union of each stable extension is a preferred
  // subtheory.
  std::map<FormulaId, PF> back;
  for (auto& [f, id] : frame.formula_of) back[id] = f;
  std::vector<std::vector<PF>> stable_unions;
  for (const auto& ext : stable.extensions) {
    std::vector<FormulaId> prem;
    for (int x : ext) {
      for (FormulaId f : frame.saf.args.arg(view.node_arg[x]).prem) sorted_insert(prem, f);
    }
    std::vector<PF> u;
    for (FormulaId f : prem) u.push_back(back.at(f));
    stable_unions.push_back(canon(u));
  }
  std::sort(stable_unions.begin(), stable_unions.end());
  stable_unions.erase(std::unique(stable_unions.begin(), stable_unions.end()),
                      stable_unions.end());
  for (auto& u : stable_unions)
    if (!std::binary_search(canon_ps.begin(), canon_ps.end(), u)) {
      res.ok = false;
      res.witness = "stable extension premises are not a preferred subtheory: {";
      for (PF f : u) res.witness += pool.to_string(f) + " ";
      res.witness += "}";
      return res;
    }

  // Direction 2: Args(Σ') is stable for each preferred subtheory Σ'.
  for (auto& sub : canon_ps) {
    std::vector<int> ext;
    for (int x = 0; x < view.af.n; ++x) {
      std::vector<PF> prem;
      for (FormulaId f : frame.saf.args.arg(view.node_arg[x]).prem) prem.push_back(back.at(f));
      std::sort(prem.begin(), prem.end());
      if (std::includes(sub.begin(), sub.end(), prem.begin(), prem.end())) ext.push_back(x);
    }
    bool is_stable =
        std::find(stable.extensions.begin(), stable.extensions.end(), ext) !=
        stable.extensions.end();
    if (!is_stable) {
      res.ok = false;
      res.witness = "Args of preferred subtheory {";
      for (PF f : sub) res.witness += pool.to_string(f) + " ";
      res.witness += "} is not a stable extension";
      return res;
    }
  }
  return res;
}

EquivalenceResult premise_minimal_equivalence_check(const PropPool& pool,
                                                    const std::vector<PF>& sigma,
                                                    const PremisePrefs& prefs,
                                                    const std::vector<PF>& user_claims,
                                                    const ClassicalOptions& opts_in,
                                                    Semantics semantics) {
  EquivalenceResult res;
  if (opts_in.ordering.setcomp != SetComparison::Elitist) {
    res.applicable = false;
    res.detail = "ordering may strengthen arguments by adding premises (non-Elitist); skipped";
    return res;
  }
  ClassicalOptions minimal = opts_in, full = opts_in;
  minimal.premise_minimal = true;
  full.premise_minimal = false;

  auto conclusion_families = [&](const ClassicalOptions& o) {
    ClassicalFrame frame = build_classical_csaf(pool, sigma, prefs, user_claims, o);
    FrameworkView view = abstract_view(frame.saf);
    ExtensionSet exts = enumerate_extensions(view.af, semantics, CfMode::Attack);
    std::vector<std::vector<std::string>> fams;
    for (const auto& ext : exts.extensions) {
      std::vector<std::string> concs;
      for (int x : ext)
        sorted_insert(concs,
                      frame.theory->lang.display(frame.saf.args.arg(view.node_arg[x]).conc));
      fams.push_back(concs);
    }
    std::sort(fams.begin(), fams.end());
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    return fams;
  };

  auto fam_min = conclusion_families(minimal);
  auto fam_full = conclusion_families(full);
  if (fam_min != fam_full) {
    res.equal = false;
    res.detail = "conclusion families differ: " + std::to_string(fam_min.size()) + " vs " +
                 std::to_string(fam_full.size());
  }
  return res;
}

StratifiedParse parse_stratified(const std::string& text) {
  StratifiedParse out;
  // Strip comments.
  std::string clean;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    }
    if (i < text.size()) clean += text[i];
  }
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < clean.size() && std::isspace(static_cast<unsigned char>(clean[pos]))) ++pos;
  };
  std::map<int, std::vector<PF>> by_index;
  while (true) {
    skip_ws();
    if (pos >= clean.size()) break;
    if (clean.compare(pos, 7, "stratum") != 0)
      throw Error("stratified theory: expected 'stratum' at offset " + std::to_string(pos));
    pos += 7;
    skip_ws();
    size_t start = pos;
    while (pos < clean.size() && std::isdigit(static_cast<unsigned char>(clean[pos]))) ++pos;
    if (start == pos) throw Error("stratified theory: expected a stratum number");
    int index = std::stoi(clean.substr(start, pos - start));
    if (index <= 0) throw Error("stratified theory: stratum numbers start at 1");
    skip_ws();
    if (pos >= clean.size() || clean[pos] != ':')
      throw Error("stratified theory: expected ':' after stratum number");
    ++pos;
    size_t end = clean.find('.', pos);
    if (end == std::string::npos)
      throw Error("stratified theory: stratum not terminated by '.'");
    std::string body = clean.substr(pos, end - pos);
    pos = end + 1;
    size_t from = 0;
    while (from <= body.size()) {
      size_t semi = body.find(';', from);
      std::string piece =
          semi == std::string::npos ? body.substr(from) : body.substr(from, semi - from);
      size_t a = piece.find_first_not_of(" \t\r\n");
      if (a != std::string::npos) {
        size_t b = piece.find_last_not_of(" \t\r\n");
        by_index[index].push_back(out.pool.parse(piece.substr(a, b - a + 1)));
      }
      if (semi == std::string::npos) break;
      from = semi + 1;
    }
  }
  if (by_index.empty()) throw Error("stratified theory: no strata");
  int expected = 1;
  for (auto& [idx, stratum] : by_index) {
    if (idx != expected)
      throw Error("stratified theory: strata must be numbered consecutively from 1");
    ++expected;
    out.strata.strata.push_back(stratum);
  }
  out.strata.validate(out.pool);
  return out;
}

}  // namespace aspic::classical
