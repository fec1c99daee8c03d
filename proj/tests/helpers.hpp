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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aspic/dsl.hpp"
#include "aspic/saf.hpp"

namespace aspic::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(ASPIC_FIXTURES) + "/" + name;
}

// Scratch files go next to the test binary, never into the source tree.
inline std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<Theory> load_fixture(const std::string& name) {
  ParseResult r = parse_theory(read_file(fixture_path(name)));
  if (!r.ok()) throw Error("fixture '" + name + "' failed to parse");
  return r.theory;
}

// The canonical textual fixture for the eight-argument example: premises
// a, r, -r, ~s; strict t,q -> -p; defeasible d1: ~s=>t, d2: r=>q, d3: a=>p;
// prefs d2<d3, -r<'r, ~s<'-r.
inline std::shared_ptr<Theory> example1_theory() { return load_fixture("example1.theory"); }

// Finds the unique argument with the given conclusion and premise displays.
inline ArgId find_arg(const ArgumentSet& set, const std::vector<ArgId>& universe,
                      const std::string& conc, const std::set<std::string>& prem) {
  const Theory& t = set.theory();
  for (ArgId a : universe) {
    const Argument& arg = set.arg(a);
    if (t.lang.display(arg.conc) != conc) continue;
    std::set<std::string> have;
    for (FormulaId f : arg.prem) have.insert(t.lang.display(f));
    if (have == prem) return a;
  }
  throw Error("no argument concluding '" + conc + "' with the requested premises");
}

// Same, by conclusion only, asserting uniqueness among the universe.
inline ArgId find_arg_by_conc(const ArgumentSet& set, const std::vector<ArgId>& universe,
                              const std::string& conc) {
  const Theory& t = set.theory();
  std::vector<ArgId> hits;
  for (ArgId a : universe)
    if (t.lang.display(set.arg(a).conc) == conc) hits.push_back(a);
  if (hits.size() != 1)
    throw Error("expected exactly one argument concluding '" + conc + "', got " +
                std::to_string(hits.size()));
  return hits[0];
}

inline bool has_attack(const std::vector<Attack>& attacks, ArgId attacker, ArgId target, ArgId on,
                       AttackKind kind) {
  for (const Attack& at : attacks)
    if (at.attacker == attacker && at.target == target && at.on == on && at.kind == kind)
      return true;
  return false;
}

inline bool has_defeat(const std::vector<Defeat>& defeats, ArgId attacker, ArgId target) {
  for (const Defeat& d : defeats)
    if (d.attacker == attacker && d.target == target) return true;
  return false;
}

}  // namespace aspic::test
