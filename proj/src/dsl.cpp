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

#include "aspic/dsl.hpp"

#include <cctype>
#include <sstream>

namespace aspic {

std::string Diagnostic::render() const {
  std::string out =
      "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += " (expected " + expected + ")";
  return out;
}

namespace {

struct LineLexer {
  const std::string& text;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  int column() const { return static_cast<int>(pos) + 1; }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      size_t after = pos + w.size();
      if (after >= text.size() ||
          !(std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_')) {
        pos = after;
        return true;
      }
    }
    return false;
  }
  bool eat_sym(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }
  // atom | -atom | ~atom | ~-atom
  std::string literal_token() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '~') ++pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
  std::string word_token() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

struct DeclParser {
  Theory& theory;
  ParseResult& result;
  // Deferred declarations: rule preferences need the rules to exist first,
  // premise preferences need K_p membership.
  std::vector<std::tuple<int, int, std::string, std::string>> rule_prefs;
  std::vector<std::tuple<int, int, FormulaId, FormulaId>> prem_prefs;

  void syntax(const LineLexer& lx, std::string msg, std::string expected = "") {
    result.syntax_errors.push_back({lx.line, lx.column(), std::move(msg), std::move(expected)});
  }
  void semantic(int line, std::string msg) {
    result.semantic_errors.push_back({line, 1, std::move(msg), ""});
  }

  FormulaId parse_formula(LineLexer& lx, bool* ok) {
    std::string tok = lx.literal_token();
    if (tok.empty()) {
      syntax(lx, "expected a formula", "atom, -atom, ~atom, ~-atom");
      *ok = false;
      return 0;
    }
    try {
      return theory.intern(tok);
    } catch (const Error& e) {
      syntax(lx, e.what());
      *ok = false;
      return 0;
    }
  }

  bool expect_dot(LineLexer& lx) {
    if (!lx.eat('.')) {
      syntax(lx, "declaration not terminated", "'.'");
      return false;
    }
    if (!lx.at_end()) {
      syntax(lx, "trailing input after '.'");
      return false;
    }
    return true;
  }

  void parse_line(const std::string& raw, int line_no) {
    LineLexer lx{raw, line_no};
    if (lx.at_end()) return;

    if (lx.eat_word("axiom")) {
      if (!lx.eat(':')) return syntax(lx, "malformed axiom declaration", "':'");
      bool ok = true;
      FormulaId f = parse_formula(lx, &ok);
      if (ok && expect_dot(lx)) theory.add_axiom(f);
      return;
    }
    if (lx.eat_word("premise")) {
      if (!lx.eat(':')) return syntax(lx, "malformed premise declaration", "':'");
      bool ok = true;
      FormulaId f = parse_formula(lx, &ok);
      if (!ok) return;
      std::optional<int> rank;
      if (lx.eat_word("rank")) {
        std::string num = lx.word_token();
        bool neg = false;
        if (num.empty() && lx.eat('-')) {
          neg = true;
          num = lx.word_token();
        }
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
          return syntax(lx, "malformed rank", "integer");
        rank = (neg ? -1 : 1) * std::stoi(num);
      }
      if (expect_dot(lx)) theory.add_premise(f, rank);
      return;
    }
    bool is_strict = lx.eat_word("strict");
    bool is_defeasible = !is_strict && lx.eat_word("defeasible");
    if (is_strict || is_defeasible) {
      std::optional<FormulaId> name;
      if (is_defeasible) {
        std::string n = lx.word_token();
        if (n.empty()) return syntax(lx, "defeasible rule needs a name", "name");
        name = theory.intern(n);
      }
      if (!lx.eat(':'))
        return syntax(lx, std::string("malformed ") + (is_strict ? "strict" : "defeasible") +
                              " rule",
                      "':'");
      std::vector<FormulaId> antecedents;
      const char* arrow = is_strict ? "->" : "=>";
      // f1, ..., fn -> f   |   -> f (no antecedents)
      bool saw_arrow = lx.eat_sym(arrow);
      while (!saw_arrow) {
        bool ok = true;
        FormulaId f = parse_formula(lx, &ok);
        if (!ok) return;
        antecedents.push_back(f);
        if (lx.eat(',')) continue;
        if (lx.eat_sym(arrow)) {
          saw_arrow = true;
          break;
        }
        return syntax(lx, "malformed rule body", std::string("',' or '") + arrow + "'");
      }
      bool ok = true;
      FormulaId cons = parse_formula(lx, &ok);
      if (!ok || !expect_dot(lx)) return;
      try {
        if (is_strict)
          theory.add_strict(std::move(antecedents), cons);
        else
          theory.add_defeasible(std::move(antecedents), cons, *name);
      } catch (const IllFormedTheory& e) {
        semantic(line_no, e.what());
      }
      return;
    }
    if (lx.eat_word("contrary")) {
      if (!lx.eat(':')) return syntax(lx, "malformed contrary declaration", "':'");
      bool ok = true;
      FormulaId f = parse_formula(lx, &ok);
      if (!ok) return;
      if (!lx.eat_word("of")) return syntax(lx, "malformed contrary declaration", "'of'");
      FormulaId g = parse_formula(lx, &ok);
      if (ok && expect_dot(lx)) theory.declare_contrary(f, g);
      return;
    }
    if (lx.eat_word("rulepref")) {
      if (!lx.eat(':')) return syntax(lx, "malformed rulepref declaration", "':'");
      std::string a = lx.word_token();
      if (a.empty()) return syntax(lx, "expected a rule name");
      if (!lx.eat('<')) return syntax(lx, "malformed rulepref declaration", "'<'");
      std::string b = lx.word_token();
      if (b.empty()) return syntax(lx, "expected a rule name");
      if (expect_dot(lx)) rule_prefs.emplace_back(line_no, lx.column(), a, b);
      return;
    }
    if (lx.eat_word("prempref")) {
      if (!lx.eat(':')) return syntax(lx, "malformed prempref declaration", "':'");
      bool ok = true;
      FormulaId a = parse_formula(lx, &ok);
      if (!ok) return;
      if (!lx.eat('<')) return syntax(lx, "malformed prempref declaration", "'<'");
      FormulaId b = parse_formula(lx, &ok);
      if (ok && expect_dot(lx)) prem_prefs.emplace_back(line_no, lx.column(), a, b);
      return;
    }
    syntax(lx, "unknown declaration",
           "axiom, premise, strict, defeasible, contrary, rulepref, prempref");
  }

  void finish() {
    for (auto& [line, col, a, b] : rule_prefs) {
      try {
        theory.add_rule_pref(theory.intern(a), theory.intern(b));
      } catch (const IllFormedTheory& e) {
        semantic(line, e.what());
      }
    }
    for (auto& [line, col, a, b] : prem_prefs) {
      try {
        theory.add_premise_pref(a, b);
      } catch (const IllFormedTheory& e) {
        semantic(line, e.what());
      }
    }
  }
};

}  // namespace

ParseResult parse_theory(const std::string& text) {
  ParseResult result;
  auto theory = std::make_shared<Theory>();
  DeclParser parser{*theory, result, {}, {}};

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool any_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    any_content = true;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    parser.parse_line(raw, line_no);
  }
  parser.finish();
  if (!any_content) result.warnings.push_back("empty theory");

  if (result.syntax_errors.empty()) {
    try {
      theory->finalize();
      result.theory = theory;
    } catch (const IllFormedTheory& e) {
      parser.semantic(0, e.what());
    }
  }
  return result;
}

std::string print_theory(const Theory& t) {
  std::ostringstream out;
  for (FormulaId f : t.kb.axioms) out << "axiom: " << t.lang.display(f) << ".\n";
  for (FormulaId f : t.kb.ordinary) {
    out << "premise: " << t.lang.display(f);
    auto it = t.premise_ranks().find(f);
    if (it != t.premise_ranks().end()) out << " rank " << it->second;
    out << ".\n";
  }
  for (const Rule& r : t.rules()) {
    if (r.strict()) {
      out << "strict: ";
    } else {
      out << "defeasible " << t.lang.display(*r.name) << ": ";
    }
    for (size_t i = 0; i < r.antecedents.size(); ++i)
      out << (i ? ", " : "") << t.lang.display(r.antecedents[i]);
    out << (r.antecedents.empty() ? "" : " ") << (r.strict() ? "-> " : "=> ")
        << t.lang.display(r.consequent) << ".\n";
  }
  for (auto& [phi, psi] : t.user_contraries())
    out << "contrary: " << t.lang.display(phi) << " of " << t.lang.display(psi) << ".\n";
  for (auto& [a, b] : t.rule_preorder.declared()) {
    const Rule& ra = t.rule(a);
    const Rule& rb = t.rule(b);
    out << "rulepref: " << t.lang.display(*ra.name) << " < " << t.lang.display(*rb.name)
        << ".\n";
  }
  for (auto& [a, b] : t.premise_preorder.declared()) {
    // Pairs the printed ranks regenerate are skipped, nothing else.
    auto ra = t.premise_ranks().find(a);
    auto rb = t.premise_ranks().find(b);
    if (ra != t.premise_ranks().end() && rb != t.premise_ranks().end() &&
        ra->second <= rb->second)
      continue;
    out << "prempref: " << t.lang.display(a) << " < " << t.lang.display(b) << ".\n";
  }
  return out.str();
}

}  // namespace aspic
