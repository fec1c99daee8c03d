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

#include "helpers.hpp"
#include "oracles.hpp"

using namespace aspic;
using namespace aspic::test;

TEST_CASE("defeats of the eight-argument fixture under last-link elitist") {
  StructuredAF saf = build_saf(example1_theory(), {LinkPrinciple::LastLink,
                                                   SetComparison::Elitist});
  ArgId A = find_arg(saf.args, saf.universe, "p", {"a"});
  ArgId B = find_arg(saf.args, saf.universe, "-p", {"~s", "r"});
  ArgId B2 = find_arg(saf.args, saf.universe, "r", {"r"});
  ArgId B2p = find_arg(saf.args, saf.universe, "q", {"r"});
  ArgId C = find_arg(saf.args, saf.universe, "-r", {"-r"});

  // Only B2 defeats C; every preference-dependent attack by B and C fails.
  REQUIRE(saf.defeats.size() == 1);
  CHECK(saf.defeats[0] == Defeat{B2, C, C});
  CHECK_FALSE(saf.defeats_pair(B, A));
  CHECK_FALSE(saf.defeats_pair(C, B));
  CHECK_FALSE(saf.defeats_pair(C, B2p));
  CHECK_FALSE(saf.defeats_pair(C, B2));
  CHECK(saf.defeats_pair(B2, C));
  CHECK(saf.strictly_defeats(B2, C));
  CHECK_FALSE(saf.strictly_defeats(C, B2));

  // The metadata records the well-definedness gap of the base theory.
  CHECK_FALSE(saf.well_defined.transposition_closed);
  CHECK(saf.exact_universe);
}

TEST_CASE("preference-independent attacks defeat regardless of the ordering") {
  // Undercutter E concluding -d3 defeats A even when E is weakest.
  auto t = std::make_shared<Theory>();
  FormulaId a = t->intern("a"), r = t->intern("r"), p = t->intern("p");
  FormulaId nd3 = t->intern("-d3");
  t->add_premise(a);
  t->add_premise(r);
  t->add_defeasible({a}, p, t->intern("d3"));
  t->add_defeasible({r}, nd3, t->intern("d9"));
  t->add_rule_pref(t->intern("d9"), t->intern("d3"));  // undercutter is weaker
  t->add_premise_pref(r, a);
  t->finalize();
  StructuredAF saf = build_saf(t, {LinkPrinciple::LastLink, SetComparison::Elitist});
  ArgId E = find_arg(saf.args, saf.universe, "-d3", {"r"});
  ArgId A = find_arg(saf.args, saf.universe, "p", {"a"});
  LinkOrdering ord(saf.args, LinkPrinciple::LastLink, SetComparison::Elitist,
                   t->rule_preorder, t->premise_preorder);
  CHECK(ord.strictly_preferred(E, A));  // E is strictly weaker
  CHECK(saf.defeats_pair(E, A));        // and still defeats: undercuts ignore preferences
}

TEST_CASE("defeat compares the attacker against the attacked sub-argument") {
  // B = [-p] attacks A3 on its premise sub-argument A1 = [p]; since the
  // comparison runs against A1 (not A3), B defeats A3 although B is below A3.
  Theory t;
  FormulaId p = t.intern("p"), q = t.intern("q"), np = t.intern("-p");
  FormulaId pq = t.intern("pq");
  t.add_premise(p);
  t.add_premise(q);
  t.add_premise(np);
  t.add_strict({p, q}, pq);
  // The conjunction stand-in contradicts -p.
  t.declare_contrary(pq, np);
  t.declare_contrary(np, pq);
  t.add_premise_pref(p, np);
  t.add_premise_pref(np, q);
  t.finalize();
  BuildResult built = build_arguments(t);
  auto attacks = compute_attacks(built.args, built.universe);
  LinkOrdering ord(built.args, LinkPrinciple::WeakestLink, SetComparison::Democratic,
                   t.rule_preorder, t.premise_preorder);
  auto defeats = compute_defeats(attacks, ord);
  ArgId A1 = find_arg(built.args, built.universe, "p", {"p"});
  ArgId A3 = find_arg(built.args, built.universe, "pq", {"p", "q"});
  ArgId B = find_arg(built.args, built.universe, "-p", {"-p"});
  CHECK(ord.strictly_preferred(B, A3));  // whole-argument comparison would block it
  CHECK(has_defeat(defeats, B, A3));     // sub-argument comparison lets it through
  CHECK(has_defeat(defeats, B, A1));
  CHECK_FALSE(has_defeat(defeats, A1, B));  // A1 is below B
  CHECK(has_defeat(defeats, A3, B));        // A3 is not
}

TEST_CASE("empty theory gives an empty framework") {
  auto t = std::make_shared<Theory>();
  t->finalize();
  StructuredAF saf = build_saf(t, {});
  CHECK(saf.universe.empty());
  CHECK(saf.attacks.empty());
  CHECK(saf.defeats.empty());
}

TEST_CASE("c-SAF mode filters c-inconsistent arguments") {
  auto t = std::make_shared<Theory>();
  FormulaId p = t->intern("p"), np = t->intern("-p"), q = t->intern("q");
  t->add_premise(p);
  t->add_premise(np);
  t->add_strict({p, np}, q);
  t->finalize();
  StructuredAF saf = build_saf(t, {}, FrameworkMode::Saf);
  StructuredAF csaf = build_saf(t, {}, FrameworkMode::CSaf);
  CHECK(saf.universe.size() == 3);   // [p], [-p], [p,-p -> q]
  CHECK(csaf.universe.size() == 2);  // the combined argument is filtered
  for (ArgId a : csaf.universe) CHECK(csaf.args.arg(a).is_premise());
}

TEST_CASE("defeats project onto attacks") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = random_well_defined_theory(rng);
    StructuredAF saf = build_saf(t, {LinkPrinciple::WeakestLink, SetComparison::Democratic});
    for (const Defeat& d : saf.defeats) {
      bool backed = false;
      for (const Attack& at : saf.attacks)
        if (at.attacker == d.attacker && at.target == d.target && at.on == d.on) backed = true;
      CHECK(backed);
    }
  }
}

TEST_CASE("defeat lifts along sub-arguments") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = random_well_defined_theory(rng);
    StructuredAF saf = build_saf(t, {LinkPrinciple::LastLink, SetComparison::Elitist});
    for (const Defeat& d : saf.defeats) {
      // Downward: the defeat of the target is a defeat of some sub-argument.
      CHECK(saf.defeats_pair(d.attacker, d.on));
      // Upward: every argument containing the attacked point is defeated.
      for (ArgId parent : saf.universe)
        if (sorted_contains(saf.args.arg(parent).sub, d.on))
          CHECK(saf.defeats_pair(d.attacker, parent));
    }
  }
}

TEST_CASE("strict-firm arguments are never attack targets at their core") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = random_well_defined_theory(rng);
    StructuredAF saf = build_saf(t, {LinkPrinciple::LastLink, SetComparison::Elitist});
    for (const Attack& at : saf.attacks) {
      const Argument& on = saf.args.arg(at.on);
      bool strict_and_firm = on.strict() && on.firm();
      CHECK_FALSE(strict_and_firm);
    }
  }
}
