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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "aspic/attack.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aspic;
using namespace aspic::test;

TEST_CASE("the eight arguments of the base fixture") {
  auto t = example1_theory();
  BuildResult built = build_arguments(*t);
  REQUIRE(built.universe.size() == 8);
  CHECK(built.exact_universe);

  std::set<std::string> rendered;
  for (ArgId a : built.universe) rendered.insert(built.args.describe(a));
  std::set<std::string> expected{
      "[a]", "[[a]=>p]", "[~s]", "[[~s]=>t]", "[r]", "[[r]=>q]",
      "[[[~s]=>t],[[r]=>q]->-p]", "[-r]"};
  CHECK(rendered == expected);

  // Accessor spot checks on B.
  ArgId b = find_arg(built.args, built.universe, "-p", {"~s", "r"});
  const Argument& B = built.args.arg(b);
  CHECK(B.prem.size() == 2);
  CHECK(B.prem_p.size() == 2);
  CHECK(B.prem_n.empty());
  CHECK(B.sub.size() == 5);  // B1, B2, B1', B2', B
  CHECK(B.def_rules.size() == 2);
  CHECK(B.strict_rules.size() == 1);
  CHECK(B.last_def_rules.size() == 2);
  CHECK(t->rule(*B.rule).strict());
  CHECK_FALSE(B.strict());
  CHECK(B.plausible());
  CHECK(B.fallible());
}

TEST_CASE("empty knowledge base yields no arguments") {
  Theory t;
  FormulaId a = t.intern("a"), b = t.intern("b");
  t.add_strict({a}, b);
  t.finalize();
  CHECK(build_arguments(t).universe.empty());
}

TEST_CASE("transposition closure adds the two continuation arguments") {
  Theory closed = example1_theory()->transposed();
  BuildResult built = build_arguments(closed);
  CHECK(built.universe.size() == 10);
  ArgId a1p = find_arg(built.args, built.universe, "-q", {"~s", "a"});
  ArgId a2p = find_arg(built.args, built.universe, "-t", {"a", "r"});
  CHECK(built.args.describe(a1p) == "[[[~s]=>t],[[a]=>p]->-q]");
  CHECK(built.args.describe(a2p) == "[[[a]=>p],[[r]=>q]->-t]");
}

TEST_CASE("budget and bounds") {
  SUBCASE("max_arguments rejects the whole set") {
    auto t = example1_theory();
    BuildLimits limits;
    limits.max_arguments = 3;
    CHECK_THROWS_AS(build_arguments(*t, limits), BudgetExceeded);
  }
  SUBCASE("limits must be positive") {
    BuildLimits limits;
    limits.max_depth = 0;
    CHECK_THROWS_AS(limits.validate(), Error);
  }
  SUBCASE("cyclic strict rules stay finite under path-distinctness") {
    Theory t;
    FormulaId a = t.intern("a"), b = t.intern("b");
    t.add_strict({a}, b);
    t.add_strict({b}, a);
    t.add_premise(a);
    t.finalize();
    BuildResult built = build_arguments(t);
    // [a] and [[a]->b]; re-deriving a above b would repeat a conclusion.
    CHECK(built.universe.size() == 2);
    CHECK_FALSE(built.exact_universe);
    CHECK(built.pruned_by_path > 0);
  }
}

TEST_CASE("sub-argument closure and accessor algebra over built sets") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_well_defined_theory(rng);
    BuildResult built = build_arguments(*t);
    for (ArgId a : built.universe) {
      const Argument& arg = built.args.arg(a);
      for (ArgId s : arg.sub)
        CHECK(std::find(built.universe.begin(), built.universe.end(), s) !=
              built.universe.end());
      CHECK(sorted_union(arg.prem_n, arg.prem_p) == arg.prem);
      CHECK(sorted_union(arg.def_rules, arg.strict_rules) == arg.rules);
      CHECK(is_subset(arg.last_def_rules, arg.def_rules));
      CHECK(arg.last_def_rules.empty() == arg.strict());
      // Identity continuation.
      CHECK(is_strict_continuation(built.args, a, {a}));
    }
  }
}

TEST_CASE("maximal fallible sub-arguments") {
  auto t = example1_theory();
  BuildResult built = build_arguments(*t);
  ArgId A = find_arg(built.args, built.universe, "p", {"a"});
  ArgId B = find_arg(built.args, built.universe, "-p", {"~s", "r"});
  ArgId C = find_arg(built.args, built.universe, "-r", {"-r"});
  ArgId B1p = find_arg(built.args, built.universe, "t", {"~s"});
  ArgId B2p = find_arg(built.args, built.universe, "q", {"r"});

  CHECK(max_fallible_subargs(built.args, A) == std::vector<ArgId>{A});
  CHECK(max_fallible_subargs(built.args, C) == std::vector<ArgId>{C});
  std::vector<ArgId> mb = max_fallible_subargs(built.args, B);
  std::sort(mb.begin(), mb.end());
  std::vector<ArgId> want{B1p, B2p};
  std::sort(want.begin(), want.end());
  CHECK(mb == want);

  SUBCASE("strict and firm arguments have none") {
    Theory s;
    FormulaId ax = s.intern("ax"), y = s.intern("y");
    s.add_axiom(ax);
    s.add_strict({ax}, y);
    s.finalize();
    BuildResult b2 = build_arguments(s);
    ArgId top = find_arg(b2.args, b2.universe, "y", {"ax"});
    CHECK(max_fallible_subargs(b2.args, top).empty());
  }
}

TEST_CASE("strict continuations") {
  Theory closed = example1_theory()->transposed();
  BuildResult built = build_arguments(closed);
  ArgId A = find_arg(built.args, built.universe, "p", {"a"});
  ArgId B = find_arg(built.args, built.universe, "-p", {"~s", "r"});
  ArgId B1p = find_arg(built.args, built.universe, "t", {"~s"});
  ArgId B2p = find_arg(built.args, built.universe, "q", {"r"});
  ArgId A1p = find_arg(built.args, built.universe, "-q", {"~s", "a"});

  CHECK(is_strict_continuation(built.args, B, {B1p, B2p}));
  CHECK(is_strict_continuation(built.args, A, {A}));
  CHECK(is_strict_continuation(built.args, A1p, {B1p, A}));
  // Not a continuation: premises differ.
  CHECK_FALSE(is_strict_continuation(built.args, B, {B1p}));
  // A defeasible step on top is not a strict continuation of the child.
  ArgId prem_a = find_arg(built.args, built.universe, "a", {"a"});
  CHECK_FALSE(is_strict_continuation(built.args, A, {prem_a}));
}

TEST_CASE("continuation preserves derivability of the conclusion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = random_well_defined_theory(rng);
    BuildResult built = build_arguments(*t);
    size_t checked = 0;
    for (ArgId a : built.universe) {
      for (ArgId b : built.universe) {
        if (a == b || checked > 200) continue;
        if (!is_strict_continuation(built.args, b, {a})) continue;
        ++checked;
        // Conc(parts) ∪ Prem_n(b) strictly derives Conc(b).
        std::vector<FormulaId> base = built.args.arg(b).prem_n;
        sorted_insert(base, built.args.arg(a).conc);
        CHECK(t->strictly_derives(base, built.args.arg(b).conc));
      }
    }
  }
}

TEST_CASE("c-consistency") {
  SUBCASE("rule-based oracle on the base fixture") {
    auto t = example1_theory();
    BuildResult built = build_arguments(*t);
    auto oracle = rule_based_oracle(*t);
    ArgId B = find_arg(built.args, built.universe, "-p", {"~s", "r"});
    CHECK(is_c_consistent(built.args, B, oracle));
  }
  SUBCASE("contradictory premises are c-inconsistent") {
    Theory t;
    FormulaId p = t.intern("p"), np = t.intern("-p");
    t.add_premise(p);
    t.add_premise(np);
    FormulaId q = t.intern("q");
    t.add_strict({p, np}, q);
    t.finalize();
    BuildResult built = build_arguments(t);
    ArgId arg = find_arg(built.args, built.universe, "q", {"p", "-p"});
    CHECK_FALSE(is_c_consistent(built.args, arg, rule_based_oracle(t)));
  }
  SUBCASE("default-conditional premises stay jointly c-consistent") {
    // q, r, q~>p, r~>-p with defeasible modus ponens only: no strict rules,
    // so nothing contradictory is derivable from the premises.
    Theory t;
    FormulaId q = t.intern("q"), r = t.intern("r");
    FormulaId qp = t.intern_opaque("q~>p"), rp = t.intern_opaque("r~>-p");
    FormulaId p = t.intern("p"), np = t.intern("-p");
    t.add_premise(q);
    t.add_premise(r);
    t.add_premise(qp);
    t.add_premise(rp);
    t.add_defeasible({q, qp}, p, t.intern("m1"));
    t.add_defeasible({r, rp}, np, t.intern("m2"));
    t.finalize();
    BuildResult built = build_arguments(t);
    std::vector<FormulaId> all{q, r, qp, rp};
    std::sort(all.begin(), all.end());
    CHECK(t.is_c_consistent_set(all));
    for (ArgId a : built.universe)
      CHECK(is_c_consistent(built.args, a, rule_based_oracle(t)));
  }
}

TEST_CASE("premise-minimal filter") {
  SUBCASE("drops the premise-superset derivation") {
    // p -> q directly, and p,r -> s -> q with a detour.
    Theory t;
    FormulaId p = t.intern("p"), q = t.intern("q"), r = t.intern("r"), s = t.intern("s");
    t.add_premise(p);
    t.add_premise(r);
    t.add_strict({p}, q);
    t.add_strict({p, r}, s);
    t.add_strict({s}, q);
    t.finalize();
    BuildResult built = build_arguments(t);
    ArgId small = find_arg(built.args, built.universe, "q", {"p"});
    ArgId big = find_arg(built.args, built.universe, "q", {"p", "r"});
    auto kept = premise_minimal_filter(built.args, built.universe);
    CHECK(std::find(kept.begin(), kept.end(), small) != kept.end());
    CHECK(std::find(kept.begin(), kept.end(), big) == kept.end());
  }
  SUBCASE("singleton set unchanged") {
    Theory t;
    FormulaId p = t.intern("p");
    t.add_premise(p);
    t.finalize();
    BuildResult built = build_arguments(t);
    CHECK(premise_minimal_filter(built.args, built.universe) == built.universe);
  }
  SUBCASE("the eight-argument set is already premise minimal") {
    auto t = example1_theory();
    BuildResult built = build_arguments(*t);
    CHECK(premise_minimal_filter(built.args, built.universe).size() == 8);
  }
}

TEST_CASE("argument ids are stable across rebuilds") {
  auto t1 = example1_theory();
  auto t2 = example1_theory();
  BuildResult b1 = build_arguments(*t1);
  BuildResult b2 = build_arguments(*t2);
  std::set<std::string> ids1, ids2;
  for (ArgId a : b1.universe) ids1.insert(b1.args.arg(a).id);
  for (ArgId a : b2.universe) ids2.insert(b2.args.arg(a).id);
  CHECK(ids1 == ids2);
  CHECK(ids1.size() == 8);
}

TEST_CASE("zero-antecedent rules apply once") {
  ParseResult r = parse_theory(
      "strict: -> p.\n"
      "defeasible d1: => q.\n");
  REQUIRE(r.ok());
  BuildResult built = build_arguments(*r.theory);
  REQUIRE(built.universe.size() == 2);
  ArgId p_arg = find_arg(built.args, built.universe, "p", {});
  ArgId q_arg = find_arg(built.args, built.universe, "q", {});
  const Argument& P = built.args.arg(p_arg);
  CHECK(P.prem.empty());
  CHECK(P.strict());
  CHECK(P.firm());  // no premises at all
  CHECK_FALSE(P.is_premise());
  const Argument& Q = built.args.arg(q_arg);
  CHECK(Q.defeasible());
  CHECK(Q.last_def_rules.size() == 1);
  // The defeasible application is attackable; the strict one is not.
  auto attacks = compute_attacks(built.args, built.universe);
  CHECK(max_fallible_subargs(built.args, q_arg) == std::vector<ArgId>{q_arg});
  CHECK(max_fallible_subargs(built.args, p_arg).empty());
  (void)attacks;
}
