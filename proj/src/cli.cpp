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

#include "aspic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspic/classical.hpp"
#include "aspic/dot_io.hpp"
#include "aspic/dsl.hpp"
#include "aspic/json_io.hpp"
#include "aspic/postulate.hpp"

namespace aspic {

namespace {

struct CommonOpts {
  std::string theory_path;
  std::string semantics = "preferred";
  std::string cf = "att";
  std::string link = "last";
  std::string setcomp = "eli";
  std::string mode = "saf";
  std::string format = "json";
  int max_depth = 32;
  size_t max_arguments = 100000;
  uint64_t seed = 1;
};

void add_theory_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--theory", o.theory_path, "theory file (DSL)")->required();
  cmd->add_option("--link", o.link, "last|weakest")->check(CLI::IsMember({"last", "weakest"}));
  cmd->add_option("--setcomp", o.setcomp, "eli|dem")->check(CLI::IsMember({"eli", "dem"}));
  cmd->add_option("--mode", o.mode, "saf|c-saf")->check(CLI::IsMember({"saf", "c-saf"}));
  cmd->add_option("--max-depth", o.max_depth, "argument depth bound");
  cmd->add_option("--max-arguments", o.max_arguments, "argument count bound");
  cmd->add_option("--seed", o.seed, "seed for sampled checks");
  cmd->add_option("--format", o.format, "json|text|dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedTheory {
  std::shared_ptr<Theory> theory;
  int error_code = 0;
};

LoadedTheory load_theory(const CommonOpts& o, std::ostream& err) {
  LoadedTheory out;
  ParseResult parsed = parse_theory(read_file(o.theory_path));
  for (const auto& d : parsed.syntax_errors) err << o.theory_path << ": " << d.render() << "\n";
  for (const auto& d : parsed.semantic_errors) err << o.theory_path << ": " << d.render() << "\n";
  for (const auto& w : parsed.warnings) err << o.theory_path << ": warning: " << w << "\n";
  if (!parsed.syntax_errors.empty()) {
    out.error_code = 2;
    return out;
  }
  if (!parsed.semantic_errors.empty()) {
    out.error_code = 3;
    return out;
  }
  out.theory = parsed.theory;
  return out;
}

OrderingSpec ordering_of(const CommonOpts& o) {
  return {o.link == "last" ? LinkPrinciple::LastLink : LinkPrinciple::WeakestLink,
          o.setcomp == "eli" ? SetComparison::Elitist : SetComparison::Democratic};
}

FrameworkMode mode_of(const CommonOpts& o) {
  return o.mode == "c-saf" ? FrameworkMode::CSaf : FrameworkMode::Saf;
}

BuildLimits limits_of(const CommonOpts& o) {
  BuildLimits l;
  l.max_depth = o.max_depth;
  l.max_arguments = o.max_arguments;
  return l;
}

StructuredAF build_from(const CommonOpts& o, const LoadedTheory& loaded) {
  return build_saf(loaded.theory, ordering_of(o), mode_of(o), limits_of(o));
}

int cmd_check(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  WellDefinedReport rep = check_well_defined(*loaded.theory, mode_of(o), o.seed);
  out << well_defined_json(rep, mode_of(o));
  return 0;
}

int cmd_args(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  StructuredAF saf = build_from(o, loaded);
  if (o.format == "text")
    out << arguments_text(saf);
  else if (o.format == "dot")
    out << dot_combined(saf);
  else
    out << arguments_json(saf);
  return 0;
}

int cmd_attacks(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  StructuredAF saf = build_from(o, loaded);
  if (o.format == "text")
    out << attacks_text(saf);
  else if (o.format == "dot")
    out << dot_attacks(saf);
  else
    out << attacks_json(saf);
  return 0;
}

int cmd_solve(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  auto semantics = semantics_from_name(o.semantics);
  if (!semantics) {
    err << "unknown semantics '" << o.semantics << "'\n";
    return 1;
  }
  StructuredAF saf = build_from(o, loaded);
  FrameworkView view = abstract_view(saf);
  CfMode cf = o.cf == "att" ? CfMode::Attack : CfMode::Defeat;
  ExtensionSet exts = enumerate_extensions(view.af, *semantics, cf);
  if (o.format == "text")
    out << solve_text(saf, view, exts);
  else if (o.format == "dot")
    out << dot_combined(saf);
  else
    out << solve_json(saf, view, exts);
  return 0;
}

int cmd_postulates(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  auto semantics = semantics_from_name(o.semantics);
  if (!semantics) {
    err << "unknown semantics '" << o.semantics << "'\n";
    return 1;
  }
  StructuredAF saf = build_from(o, loaded);
  CfMode cf = o.cf == "att" ? CfMode::Attack : CfMode::Defeat;
  PostulateReport rep = check_postulates_all(saf, *semantics, cf);
  out << postulates_json(rep, saf.args);
  return rep.all_ok() ? 0 : 4;
}

int cmd_dot(const CommonOpts& o, const std::string& attacks_out, const std::string& defeats_out,
            std::ostream& out, std::ostream& err) {
  LoadedTheory loaded = load_theory(o, err);
  if (loaded.error_code) return loaded.error_code;
  StructuredAF saf = build_from(o, loaded);
  if (attacks_out.empty() && defeats_out.empty()) {
    out << dot_combined(saf);
    return 0;
  }
  if (!attacks_out.empty()) std::ofstream(attacks_out) << dot_attacks(saf);
  if (!defeats_out.empty()) std::ofstream(defeats_out) << dot_defeats(saf);
  return 0;
}

int cmd_classical(const std::string& path, const CommonOpts& o,
                  const std::vector<std::string>& claims, std::ostream& out, std::ostream& err) {
  classical::StratifiedParse parsed;
  try {
    parsed = classical::parse_stratified(read_file(path));
  } catch (const Error& e) {
    err << path << ": " << e.what() << "\n";
    return 2;
  }
  std::vector<classical::PF> user_claims;
  for (const auto& c : claims) user_claims.push_back(parsed.pool.parse(c));
  classical::ClassicalOptions opts;
  opts.ordering = ordering_of(o);
  classical::ClassicalFrame frame =
      classical::build_classical_csaf(parsed.pool, parsed.strata, user_claims, opts);
  auto semantics = semantics_from_name(o.semantics);
  if (!semantics) {
    err << "unknown semantics '" << o.semantics << "'\n";
    return 1;
  }
  FrameworkView view = abstract_view(frame.saf);
  CfMode cf = o.cf == "att" ? CfMode::Attack : CfMode::Defeat;
  ExtensionSet exts = enumerate_extensions(view.af, *semantics, cf);
  std::string claims_list;
  for (classical::PF c : frame.claims) {
    if (!claims_list.empty()) claims_list += ", ";
    claims_list += frame.pool.to_string(c);
  }
  out << solve_json(frame.saf, view, exts, {{"claims_universe", claims_list}});
  return 0;
}

int cmd_ps(const std::string& path, std::ostream& out, std::ostream& err) {
  classical::StratifiedParse parsed;
  try {
    parsed = classical::parse_stratified(read_file(path));
  } catch (const Error& e) {
    err << path << ": " << e.what() << "\n";
    return 2;
  }
  auto subtheories = ps::preferred_subtheories(parsed.pool, parsed.strata);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  std::vector<std::vector<std::string>> rendered;
  for (const auto& s : subtheories) {
    std::vector<std::string> one;
    for (classical::PF f : s) one.push_back(parsed.pool.to_string(f));
    std::sort(one.begin(), one.end());
    rendered.push_back(one);
  }
  std::sort(rendered.begin(), rendered.end());
  for (auto& one : rendered) j.push_back(one);
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"structured argumentation with preferences"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string dot_attacks_out, dot_defeats_out, classical_path, ps_path;
  std::vector<std::string> claims;

  CLI::App* check = app.add_subcommand("check", "parse a theory and report well-definedness");
  add_theory_flags(check, o);

  CLI::App* argsc = app.add_subcommand("args", "build and list arguments");
  add_theory_flags(argsc, o);

  CLI::App* attacks = app.add_subcommand("attacks", "list attack records with defeat status");
  add_theory_flags(attacks, o);

  CLI::App* solve = app.add_subcommand("solve", "enumerate extensions");
  add_theory_flags(solve, o);
  solve->add_option("--semantics", o.semantics, "admissible|complete|grounded|preferred|stable")
      ->check(CLI::IsMember({"admissible", "complete", "grounded", "preferred", "stable"}));
  solve->add_option("--cf", o.cf, "att|def")->check(CLI::IsMember({"att", "def"}));

  CLI::App* postulates = app.add_subcommand("postulates", "check the rationality postulates");
  add_theory_flags(postulates, o);
  postulates
      ->add_option("--semantics", o.semantics, "admissible|complete|grounded|preferred|stable")
      ->check(CLI::IsMember({"admissible", "complete", "grounded", "preferred", "stable"}));
  postulates->add_option("--cf", o.cf, "att|def")->check(CLI::IsMember({"att", "def"}));

  CLI::App* dot = app.add_subcommand("dot", "DOT export (combined, or two panel files)");
  add_theory_flags(dot, o);
  dot->add_option("--attacks-out", dot_attacks_out, "write the attack panel here");
  dot->add_option("--defeats-out", dot_defeats_out, "write the defeat panel here");

  CLI::App* classical_cmd =
      app.add_subcommand("classical", "solve a stratified classical theory");
  classical_cmd->add_option("--theory", classical_path, "stratified theory file")->required();
  classical_cmd->add_option("--claim", claims, "extra claims (propositional formulas)");
  classical_cmd->add_option("--semantics", o.semantics, "semantics")
      ->check(CLI::IsMember({"admissible", "complete", "grounded", "preferred", "stable"}));
  classical_cmd->add_option("--cf", o.cf, "att|def")->check(CLI::IsMember({"att", "def"}));
  classical_cmd->add_option("--link", o.link, "last|weakest")
      ->check(CLI::IsMember({"last", "weakest"}));
  classical_cmd->add_option("--setcomp", o.setcomp, "eli|dem")
      ->check(CLI::IsMember({"eli", "dem"}));

  CLI::App* ps_cmd = app.add_subcommand("ps", "enumerate preferred subtheories");
  ps_cmd->add_option("--theory", ps_path, "stratified theory file")->required();

  // CLI11 wants argv-style reversed input.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (argsc->parsed()) return cmd_args(o, out, err);
    if (attacks->parsed()) return cmd_attacks(o, out, err);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (postulates->parsed()) return cmd_postulates(o, out, err);
    if (dot->parsed()) return cmd_dot(o, dot_attacks_out, dot_defeats_out, out, err);
    if (classical_cmd->parsed()) return cmd_classical(classical_path, o, claims, out, err);
    if (ps_cmd->parsed()) return cmd_ps(ps_path, out, err);
  } catch (const IllFormedTheory& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace aspic
