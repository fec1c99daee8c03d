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

TEST_CASE("set comparison clause order") {
  Preorder pre;
  pre.add_leq(0, 1);  // 0 < 1
  pre.add_element(2);
  pre.close();

  SUBCASE("an empty left side never wins") {
    CHECK_FALSE(set_compare({}, {0}, SetComparison::Elitist, pre));
    CHECK_FALSE(set_compare({}, {}, SetComparison::Elitist, pre));
    CHECK_FALSE(set_compare({}, {0}, SetComparison::Democratic, pre));
  }
  SUBCASE("a nonempty left side beats an empty right side") {
    CHECK(set_compare({0}, {}, SetComparison::Elitist, pre));
    CHECK(set_compare({2}, {}, SetComparison::Democratic, pre));
  }
  SUBCASE("elitist needs one element below all") {
    CHECK(set_compare({0, 2}, {1}, SetComparison::Elitist, pre));
    CHECK_FALSE(set_compare({2}, {1}, SetComparison::Elitist, pre));
  }
  SUBCASE("democratic needs every element below something") {
    CHECK_FALSE(set_compare({0, 2}, {1}, SetComparison::Democratic, pre));
    CHECK(set_compare({0}, {1}, SetComparison::Democratic, pre));
  }
  SUBCASE("leq adds set identity only") {
    CHECK(set_compare_leq({2}, {2}, SetComparison::Elitist, pre));
    CHECK_FALSE(set_compare_leq({2}, {0}, SetComparison::Elitist, pre));
  }
  SUBCASE("unregistered elements are rejected") {
    CHECK_THROWS_AS(set_compare({7}, {0}, SetComparison::Elitist, pre), UnknownElement);
  }
}

namespace {

struct Example9 {
  std::shared_ptr<Theory> theory = example1_theory();
  BuildResult built = build_arguments(*theory);
  ArgId A, B, B2, C;

  Example9() {
    A = find_arg(built.args, built.universe, "p", {"a"});
    B = find_arg(built.args, built.universe, "-p", {"~s", "r"});
    B2 = find_arg(built.args, built.universe, "r", {"r"});
    C = find_arg(built.args, built.universe, "-r", {"-r"});
  }

  LinkOrdering ordering(LinkPrinciple link, SetComparison s) const {
    return LinkOrdering(built.args, link, s, theory->rule_preorder, theory->premise_preorder);
  }
};

}  // namespace

TEST_CASE("the eight comparison outcomes") {
  Example9 fx;
  // B vs A: strictly below under last-link Elitist only.
  CHECK(fx.ordering(LinkPrinciple::LastLink, SetComparison::Elitist)
            .strictly_preferred(fx.B, fx.A));
  CHECK_FALSE(fx.ordering(LinkPrinciple::WeakestLink, SetComparison::Elitist)
                  .strictly_preferred(fx.B, fx.A));
  CHECK_FALSE(fx.ordering(LinkPrinciple::LastLink, SetComparison::Democratic)
                  .strictly_preferred(fx.B, fx.A));
  CHECK_FALSE(fx.ordering(LinkPrinciple::WeakestLink, SetComparison::Democratic)
                  .strictly_preferred(fx.B, fx.A));
  // C vs B2: strictly below under all four combinations.
  CHECK(fx.ordering(LinkPrinciple::LastLink, SetComparison::Elitist)
            .strictly_preferred(fx.C, fx.B2));
  CHECK(fx.ordering(LinkPrinciple::WeakestLink, SetComparison::Elitist)
            .strictly_preferred(fx.C, fx.B2));
  CHECK(fx.ordering(LinkPrinciple::LastLink, SetComparison::Democratic)
            .strictly_preferred(fx.C, fx.B2));
  CHECK(fx.ordering(LinkPrinciple::WeakestLink, SetComparison::Democratic)
            .strictly_preferred(fx.C, fx.B2));
}

TEST_CASE("strict-firm dominance is forced by the definition") {
  Theory t;
  FormulaId ax = t.intern("ax"), y = t.intern("y"), u = t.intern("u"), w = t.intern("w");
  t.add_axiom(ax);
  t.add_strict({ax}, y);
  t.add_premise(u);
  t.add_defeasible({u}, w, t.intern("d1"));
  t.finalize();
  BuildResult built = build_arguments(t);
  ArgId firm_strict = find_arg(built.args, built.universe, "y", {"ax"});
  ArgId fallible = find_arg(built.args, built.universe, "w", {"u"});
  for (auto link : {LinkPrinciple::LastLink, LinkPrinciple::WeakestLink})
    for (auto s : {SetComparison::Elitist, SetComparison::Democratic}) {
      LinkOrdering ord(built.args, link, s, t.rule_preorder, t.premise_preorder);
      CHECK(ord.strictly_preferred(fallible, firm_strict));
      CHECK_FALSE(ord.strictly_preferred(firm_strict, fallible));
      // Two strict+firm arguments are never strictly ordered.
      ArgId axiom_arg = find_arg(built.args, built.universe, "ax", {"ax"});
      CHECK_FALSE(ord.strictly_preferred(firm_strict, axiom_arg));
      CHECK_FALSE(ord.strictly_preferred(axiom_arg, firm_strict));
    }
}

TEST_CASE("leq completion clauses") {
  Example9 fx;
  LinkOrdering last = fx.ordering(LinkPrinciple::LastLink, SetComparison::Elitist);
  CHECK(last.leq(fx.A, fx.A));
  CHECK(last.leq(fx.B, fx.A));        // from B strictly below A
  CHECK_FALSE(last.leq(fx.A, fx.B));  // different last rules, no strict edge
  LinkOrdering weakest = fx.ordering(LinkPrinciple::WeakestLink, SetComparison::Elitist);
  CHECK(weakest.leq(fx.C, fx.C));
  CHECK(weakest.leq(fx.C, fx.B2));
}

TEST_CASE("elitist and democratic comparisons are reasonable inducing") {
  Preorder pre;
  std::mt19937_64 rng(31);
  for (uint32_t e = 0; e < 8; ++e) pre.add_element(e);
  for (int i = 0; i < 10; ++i) pre.add_leq(rng() % 8, rng() % 8);
  pre.close();
  std::vector<uint32_t> elements(pre.elements());

  PropertyReport eli =
      check_reasonable_inducing(builtin_compare(SetComparison::Elitist, pre), elements, 1000, 5);
  CHECK(eli.ok);
  CHECK(eli.samples >= 1000);
  PropertyReport dem = check_reasonable_inducing(builtin_compare(SetComparison::Democratic, pre),
                                                 elements, 1000, 5);
  CHECK(dem.ok);
}

TEST_CASE("a cyclic custom comparison fails with a witness") {
  // Rock-paper-scissors on singletons: transitivity must break.
  SetCompareFn rps = [](const std::vector<uint32_t>& g, const std::vector<uint32_t>& gp) {
    if (g.empty() || gp.empty()) return !g.empty() && gp.empty();
    uint32_t x = g[0] % 3, y = gp[0] % 3;
    return (x + 1) % 3 == y;
  };
  PropertyReport rep = check_reasonable_inducing(rps, {0, 1, 2}, 500, 7);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.witnesses.empty());
}

TEST_CASE("last and weakest link orderings sample as reasonable") {
  Theory closed = example1_theory()->transposed();
  BuildResult built = build_arguments(closed);
  for (auto link : {LinkPrinciple::LastLink, LinkPrinciple::WeakestLink})
    for (auto s : {SetComparison::Elitist, SetComparison::Democratic}) {
      LinkOrdering ord(built.args, link, s, closed.rule_preorder, closed.premise_preorder);
      PropertyReport rep = check_reasonable_sample(built.args, ord, built.universe, 150, 3);
      CHECK(rep.ok);
      if (!rep.ok)
        for (auto& w : rep.witnesses) MESSAGE(w);
    }
}

TEST_CASE("the continuation triple cannot be dominated all around") {
  // With B below A it cannot also be that A1+ is below B2' and A2+ below B1'.
  Theory closed = example1_theory()->transposed();
  BuildResult built = build_arguments(closed);
  ArgId A = find_arg(built.args, built.universe, "p", {"a"});
  ArgId B = find_arg(built.args, built.universe, "-p", {"~s", "r"});
  ArgId B1p = find_arg(built.args, built.universe, "t", {"~s"});
  ArgId B2p = find_arg(built.args, built.universe, "q", {"r"});
  ArgId A1p = find_arg(built.args, built.universe, "-q", {"~s", "a"});
  ArgId A2p = find_arg(built.args, built.universe, "-t", {"a", "r"});
  LinkOrdering ord(built.args, LinkPrinciple::LastLink, SetComparison::Elitist,
                   closed.rule_preorder, closed.premise_preorder);
  bool b_below_a = ord.strictly_preferred(B, A);
  bool a1_below = ord.strictly_preferred(A1p, B2p);
  bool a2_below = ord.strictly_preferred(A2p, B1p);
  CHECK(b_below_a);
  bool all_three = b_below_a && a1_below && a2_below;
  CHECK_FALSE(all_three);
  CHECK_FALSE(a1_below);
  CHECK_FALSE(a2_below);
}

TEST_CASE("strict part of link orderings is a strict partial order") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = random_well_defined_theory(rng);
    BuildResult built = build_arguments(*t);
    if (built.universe.size() > 60) continue;
    for (auto link : {LinkPrinciple::LastLink, LinkPrinciple::WeakestLink})
      for (auto s : {SetComparison::Elitist, SetComparison::Democratic}) {
        LinkOrdering ord(built.args, link, s, t->rule_preorder, t->premise_preorder);
        for (ArgId a : built.universe) CHECK_FALSE(ord.strictly_preferred(a, a));
        for (int i = 0; i < 200; ++i) {
          ArgId x = built.universe[rng() % built.universe.size()];
          ArgId y = built.universe[rng() % built.universe.size()];
          ArgId z = built.universe[rng() % built.universe.size()];
          if (ord.strictly_preferred(x, y) && ord.strictly_preferred(y, z))
            CHECK(ord.strictly_preferred(x, z));
        }
      }
  }
}

TEST_CASE("elitist never strengthens by adding premises, democratic may") {
  // Premise sets {p}, {p,q}, {r} with p below r.
  Theory t;
  FormulaId p = t.intern("p"), q = t.intern("q"), r = t.intern("r");
  FormulaId cp = t.intern("cp"), cpq = t.intern("cpq"), cr = t.intern("cr");
  t.add_premise(p);
  t.add_premise(q);
  t.add_premise(r);
  t.add_strict({p}, cp);
  t.add_strict({p, q}, cpq);
  t.add_strict({r}, cr);
  t.add_premise_pref(p, r);
  t.finalize();
  BuildResult built = build_arguments(t);
  ArgId a_minus = find_arg(built.args, built.universe, "cp", {"p"});
  ArgId a_full = find_arg(built.args, built.universe, "cpq", {"p", "q"});
  ArgId b = find_arg(built.args, built.universe, "cr", {"r"});

  LinkOrdering dem(built.args, LinkPrinciple::WeakestLink, SetComparison::Democratic,
                   t.rule_preorder, t.premise_preorder);
  CHECK_FALSE(dem.strictly_preferred(a_full, b));  // the full argument is not below B
  CHECK(dem.strictly_preferred(a_minus, b));       // but its premise-subset variant is

  LinkOrdering eli(built.args, LinkPrinciple::WeakestLink, SetComparison::Elitist,
                   t.rule_preorder, t.premise_preorder);
  if (!eli.strictly_preferred(a_full, b)) CHECK_FALSE(eli.strictly_preferred(a_minus, b));
}

TEST_CASE("weakest link compares rules when both arguments are firm") {
  // Axioms only, so both arguments are firm but defeasible.
  Theory t;
  FormulaId ax = t.intern("ax"), u = t.intern("u"), w = t.intern("w");
  t.add_axiom(ax);
  t.add_defeasible({ax}, u, t.intern("d1"));
  t.add_defeasible({ax}, w, t.intern("d2"));
  t.add_rule_pref(t.intern("d1"), t.intern("d2"));
  t.finalize();
  BuildResult built = build_arguments(t);
  ArgId U = find_arg(built.args, built.universe, "u", {"ax"});
  ArgId W = find_arg(built.args, built.universe, "w", {"ax"});
  LinkOrdering weakest(built.args, LinkPrinciple::WeakestLink, SetComparison::Elitist,
                       t.rule_preorder, t.premise_preorder);
  CHECK(weakest.strictly_preferred(U, W));
  CHECK_FALSE(weakest.strictly_preferred(W, U));
  LinkOrdering last(built.args, LinkPrinciple::LastLink, SetComparison::Elitist,
                    t.rule_preorder, t.premise_preorder);
  CHECK(last.strictly_preferred(U, W));
}
