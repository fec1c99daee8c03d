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

#include <json.hpp>
#include <sstream>

#include "aspic/cli.hpp"
#include "aspic/dot_io.hpp"
#include "aspic/json_io.hpp"
#include "helpers.hpp"

using namespace aspic;
using namespace aspic::test;

TEST_CASE("parsing the base fixture") {
  ParseResult r = parse_theory(read_file(fixture_path("example1.theory")));
  REQUIRE(r.ok());
  CHECK(r.theory->kb.ordinary.size() == 4);
  CHECK(r.theory->kb.axioms.empty());
  CHECK(r.theory->strict_rule_ids().size() == 1);
  CHECK(r.theory->defeasible_rule_ids().size() == 3);
}

TEST_CASE("empty input parses to an empty theory with a warning") {
  ParseResult r = parse_theory("# only a comment\n\n");
  REQUIRE(r.ok());
  CHECK(r.theory->kb.all().empty());
  REQUIRE(!r.warnings.empty());
  CHECK(r.warnings[0] == "empty theory");
}

TEST_CASE("positioned diagnostics with recovery") {
  // Missing comma on line 2, unknown declaration on line 4: both reported.
  std::string text =
      "premise: t.\n"
      "strict: t q -> p.\n"
      "premise: q.\n"
      "bogus: x.\n";
  ParseResult r = parse_theory(text);
  CHECK_FALSE(r.ok());
  REQUIRE(r.syntax_errors.size() == 2);
  CHECK(r.syntax_errors[0].line == 2);
  CHECK(r.syntax_errors[0].column == 11);  // at the second antecedent token
  CHECK(r.syntax_errors[0].expected.find("','") != std::string::npos);
  CHECK(r.syntax_errors[1].line == 4);
  // Recovery kept parsing: the later premise declaration was seen.
  CHECK_FALSE(r.theory);
}

TEST_CASE("semantic ill-formedness is distinguished from syntax errors") {
  SUBCASE("duplicate defeasible names") {
    ParseResult r = parse_theory(
        "premise: a.\n"
        "defeasible d1: a => b.\n"
        "defeasible d1: a => c.\n");
    CHECK(r.syntax_errors.empty());
    REQUIRE(r.semantic_errors.size() == 1);
    CHECK(r.semantic_errors[0].line == 3);
  }
  SUBCASE("axiom/premise overlap") {
    ParseResult r = parse_theory("axiom: a.\npremise: a.\n");
    CHECK(r.syntax_errors.empty());
    CHECK_FALSE(r.semantic_errors.empty());
  }
  SUBCASE("rulepref over unknown names") {
    ParseResult r = parse_theory("premise: a.\nrulepref: d1 < d2.\n");
    CHECK(r.syntax_errors.empty());
    CHECK_FALSE(r.semantic_errors.empty());
  }
  SUBCASE("prempref over a non-premise") {
    ParseResult r = parse_theory("premise: a.\nprempref: a < b.\n");
    CHECK(r.syntax_errors.empty());
    CHECK_FALSE(r.semantic_errors.empty());
  }
}

TEST_CASE("ranks fold into the premise preorder") {
  ParseResult r = parse_theory(
      "premise: a rank 1.\n"
      "premise: b rank 2.\n"
      "premise: c.\n");
  REQUIRE(r.ok());
  const Theory& t = *r.theory;
  FormulaId a = *t.lang.find("a"), b = *t.lang.find("b"), c = *t.lang.find("c");
  CHECK(t.premise_preorder.lt(a, b));       // higher rank is stronger
  CHECK_FALSE(t.premise_preorder.lt(b, a));
  CHECK_FALSE(t.premise_preorder.leq(a, c));  // unranked premises stay incomparable
  CHECK_FALSE(t.premise_preorder.leq(c, a));
}

TEST_CASE("contrary declarations load asymmetrically") {
  ParseResult r = parse_theory(
      "premise: a.\npremise: b.\ncontrary: a of b.\n");
  REQUIRE(r.ok());
  FormulaId a = *r.theory->lang.find("a"), b = *r.theory->lang.find("b");
  CHECK(r.theory->con.is_contrary(a, b));
  CHECK_FALSE(r.theory->con.in_con(b, a));
}

TEST_CASE("print-parse is a fixpoint on the theory") {
  for (const char* fixture : {"example1.theory"}) {
    ParseResult first = parse_theory(read_file(fixture_path(fixture)));
    REQUIRE(first.ok());
    std::string printed = print_theory(*first.theory);
    ParseResult second = parse_theory(printed);
    REQUIRE(second.ok());
    CHECK(print_theory(*second.theory) == printed);
    // Same structure: knowledge base, rules, preorders.
    CHECK(second.theory->kb.axioms == first.theory->kb.axioms);
    CHECK(second.theory->kb.ordinary == first.theory->kb.ordinary);
    CHECK(second.theory->rules().size() == first.theory->rules().size());
  }
  SUBCASE("ranked premises survive the round trip") {
    ParseResult r = parse_theory("premise: a rank 3.\npremise: b rank 1.\n");
    REQUIRE(r.ok());
    ParseResult r2 = parse_theory(print_theory(*r.theory));
    REQUIRE(r2.ok());
    FormulaId a = *r2.theory->lang.find("a"), b = *r2.theory->lang.find("b");
    CHECK(r2.theory->premise_preorder.lt(b, a));
  }
}

namespace {
int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}
}  // namespace

TEST_CASE("cli exit codes") {
  std::string out, err;
  SUBCASE("ok") {
    CHECK(run({"check", "--theory", fixture_path("example1.theory")}, &out, &err) == 0);
  }
  SUBCASE("parse error is 2") {
    std::string bad = temp_path("aspic_bad_syntax.theory");
    {
      std::ofstream f(bad);
      f << "strict: t q -> p.\n";
    }
    CHECK(run({"check", "--theory", bad}, &out, &err) == 2);
    CHECK(err.find("line 1") != std::string::npos);
  }
  SUBCASE("ill-formed theory is 3") {
    std::string bad = temp_path("aspic_bad_semantic.theory");
    {
      std::ofstream f(bad);
      f << "axiom: a.\npremise: a.\n";
    }
    CHECK(run({"check", "--theory", bad}, &out, &err) == 3);
  }
  SUBCASE("postulate violation is nonzero") {
    CHECK(run({"postulates", "--theory", fixture_path("example1.theory"), "--semantics",
               "complete", "--cf", "def"},
              &out, &err) == 4);
    auto rep = nlohmann::json::parse(out);
    CHECK(rep["ok"] == false);
  }
}

TEST_CASE("cli json surfaces") {
  std::string out, err;
  SUBCASE("args") {
    REQUIRE(run({"args", "--theory", fixture_path("example1.theory")}, &out, &err) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.size() == 8);
    for (auto& arg : j) {
      CHECK(arg.contains("id"));
      CHECK(arg.contains("conc"));
      CHECK(arg.contains("prem"));
      CHECK(arg.contains("prem_p"));
      CHECK(arg.contains("rules"));
      CHECK(arg.contains("sub_ids"));
    }
  }
  SUBCASE("attacks") {
    REQUIRE(run({"attacks", "--theory", fixture_path("example1.theory")}, &out, &err) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.size() == 5);
    int defeats = 0;
    for (auto& at : j)
      if (at["defeats"].get<bool>()) ++defeats;
    CHECK(defeats == 1);
  }
  SUBCASE("solve with grounded semantics on the one-defeat graph") {
    REQUIRE(run({"solve", "--theory", fixture_path("example1.theory"), "--semantics", "grounded",
                 "--cf", "def"},
                &out, &err) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["semantics"] == "grounded");
    REQUIRE(j["extensions"].size() == 1);
    CHECK(j["extensions"][0].size() == 7);  // everything except the defeated premise arg
    CHECK(j["justified"]["-p"]["sceptical"] == true);
    CHECK(j["meta"]["exact_universe"] == true);
  }
  SUBCASE("classical and ps") {
    REQUIRE(run({"classical", "--theory", fixture_path("example11.stheory"), "--semantics",
                 "stable"},
                &out, &err) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["extensions"].size() == 2);
    CHECK(j["justified"]["x"]["sceptical"] == true);
    REQUIRE(run({"ps", "--theory", fixture_path("example11.stheory")}, &out, &err) == 0);
    auto ps = nlohmann::json::parse(out);
    REQUIRE(ps.size() == 2);
  }
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
  for (auto args : {std::vector<std::string>{"args", "--theory", fixture_path("example1.theory")},
                    {"attacks", "--theory", fixture_path("example1.theory")},
                    {"solve", "--theory", fixture_path("example1.theory"), "--semantics",
                     "preferred", "--cf", "att"},
                    {"dot", "--theory", fixture_path("example1.theory")}}) {
    std::string out1, out2;
    REQUIRE(run(args, &out1) == 0);
    REQUIRE(run(args, &out2) == 0);
    CHECK(out1 == out2);
    CHECK_FALSE(out1.empty());
  }
}

TEST_CASE("dot output is well-formed") {
  StructuredAF saf = build_saf(example1_theory(), {LinkPrinciple::LastLink,
                                                   SetComparison::Elitist});
  std::string combined = dot_combined(saf);
  CHECK(combined.rfind("digraph", 0) == 0);
  CHECK(combined.find("->") != std::string::npos);
  CHECK(combined.back() == '\n');
  // Balanced braces and quotes.
  CHECK(std::count(combined.begin(), combined.end(), '{') ==
        std::count(combined.begin(), combined.end(), '}'));
  CHECK(std::count(combined.begin(), combined.end(), '"') % 2 == 0);
  std::string attacks = dot_attacks(saf);
  CHECK(attacks.find("undermine") != std::string::npos);
  CHECK(attacks.find("rebut") != std::string::npos);
  std::string defeats = dot_defeats(saf);
  CHECK(std::count(defeats.begin(), defeats.end(), '>') >= 1);
}

TEST_CASE("format flag: text and dot") {
  std::string out, err;
  SUBCASE("text tables") {
    REQUIRE(run({"solve", "--theory", fixture_path("example1.theory"), "--semantics",
                 "grounded", "--cf", "def", "--format", "text"},
                &out, &err) == 0);
    CHECK(out.find("grounded (def): 1 extension(s)") != std::string::npos);
    CHECK(out.find("[[[~s]=>t],[[r]=>q]->-p]") != std::string::npos);
    REQUIRE(run({"args", "--theory", fixture_path("example1.theory"), "--format", "text"},
                &out, &err) == 0);
    CHECK(out.find("[-r]") != std::string::npos);
    REQUIRE(run({"attacks", "--theory", fixture_path("example1.theory"), "--format", "text"},
                &out, &err) == 0);
    CHECK(out.find("undermines") != std::string::npos);
  }
  SUBCASE("dot digraphs round-trip through a structural parse") {
    REQUIRE(run({"solve", "--theory", fixture_path("example1.theory"), "--format", "dot"},
                &out, &err) == 0);
    // digraph <name> { lines }: every non-brace line is a node or edge stmt.
    std::istringstream in(out);
    std::string line;
    std::getline(in, line);
    REQUIRE(line.rfind("digraph", 0) == 0);
    REQUIRE(line.back() == '{');
    int nodes = 0, edges = 0;
    bool closed = false;
    while (std::getline(in, line)) {
      if (line == "}") {
        closed = true;
        break;
      }
      REQUIRE(line.size() > 2);
      REQUIRE(line.substr(0, 2) == "  ");
      REQUIRE(line.back() == ';');
      if (line.find("\" -> \"") != std::string::npos)
        ++edges;
      else
        ++nodes;
      // Quoted identifiers stay balanced.
      CHECK(std::count(line.begin(), line.end(), '"') % 2 == 0);
    }
    CHECK(closed);
    CHECK(nodes == 8);
    CHECK(edges >= 6);  // 5 attack rows + 1 defeat row
  }
}

TEST_CASE("grounded on an attack-free theory holds every argument") {
  std::string path = temp_path("aspic_edgeless.theory");
  {
    std::ofstream f(path);
    f << "premise: m.\npremise: n.\n";
  }
  std::string out, err;
  REQUIRE(run({"solve", "--theory", path, "--semantics", "grounded"}, &out, &err) == 0);
  auto j = nlohmann::json::parse(out);
  REQUIRE(j["extensions"].size() == 1);
  CHECK(j["extensions"][0].size() == 2);
  CHECK(j["justified"]["m"]["sceptical"] == true);
  CHECK(j["justified"]["n"]["sceptical"] == true);
}

TEST_CASE("the dot subcommand writes the two panel files") {
  std::string attacks_path = temp_path("aspic_panel_attacks.dot");
  std::string defeats_path = temp_path("aspic_panel_defeats.dot");
  std::string out, err;
  REQUIRE(run({"dot", "--theory", fixture_path("example1.theory"), "--attacks-out", attacks_path,
               "--defeats-out", defeats_path},
              &out, &err) == 0);
  CHECK(out.empty());
  std::string attacks = read_file(attacks_path);
  std::string defeats = read_file(defeats_path);
  CHECK(attacks.rfind("digraph attacks", 0) == 0);
  CHECK(defeats.rfind("digraph defeats", 0) == 0);
  CHECK(std::count(attacks.begin(), attacks.end(), '\n') >
        std::count(defeats.begin(), defeats.end(), '\n'));  // 5 attack rows vs 1 defeat row
}
