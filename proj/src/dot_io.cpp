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

#include "aspic/dot_io.hpp"

#include <algorithm>
#include <sstream>

namespace aspic {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void emit_nodes(std::ostringstream& out, const StructuredAF& saf) {
  std::vector<ArgId> order = saf.universe;
  std::sort(order.begin(), order.end(), [&](ArgId a, ArgId b) {
    return saf.args.arg(a).id < saf.args.arg(b).id;
  });
  for (ArgId a : order) {
    const Argument& arg = saf.args.arg(a);
    out << "  \"" << arg.id << "\" [label=\""
        << escape(saf.theory->lang.display(arg.conc) + "\\n" + saf.args.describe(a)) << "\"];\n";
  }
}

struct EdgeRow {
  std::string from, to, attrs;
  bool operator<(const EdgeRow& o) const {
    return std::tie(from, to, attrs) < std::tie(o.from, o.to, o.attrs);
  }
};

void emit_edges(std::ostringstream& out, std::vector<EdgeRow> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const EdgeRow& a, const EdgeRow& b) {
                           return a.from == b.from && a.to == b.to && a.attrs == b.attrs;
                         }),
             rows.end());
  for (const auto& r : rows)
    out << "  \"" << r.from << "\" -> \"" << r.to << "\" [" << r.attrs << "];\n";
}

}  // namespace

std::string dot_attacks(const StructuredAF& saf) {
  std::ostringstream out;
  out << "digraph attacks {\n";
  emit_nodes(out, saf);
  std::vector<EdgeRow> rows;
  for (const Attack& at : saf.attacks)
    rows.push_back({saf.args.arg(at.attacker).id, saf.args.arg(at.target).id,
                    std::string("style=solid, label=\"") + attack_kind_name(at.kind) + "\""});
  emit_edges(out, std::move(rows));
  out << "}\n";
  return out.str();
}

std::string dot_defeats(const StructuredAF& saf) {
  std::ostringstream out;
  out << "digraph defeats {\n";
  emit_nodes(out, saf);
  std::vector<EdgeRow> rows;
  for (const Defeat& d : saf.defeats)
    rows.push_back({saf.args.arg(d.attacker).id, saf.args.arg(d.target).id,
                    "style=bold, color=black"});
  emit_edges(out, std::move(rows));
  out << "}\n";
  return out.str();
}

std::string dot_combined(const StructuredAF& saf) {
  std::ostringstream out;
  out << "digraph saf {\n";
  emit_nodes(out, saf);
  std::vector<EdgeRow> rows;
  for (const Attack& at : saf.attacks)
    rows.push_back({saf.args.arg(at.attacker).id, saf.args.arg(at.target).id,
                    std::string("style=solid, label=\"") + attack_kind_name(at.kind) + "\""});
  for (const Defeat& d : saf.defeats)
    rows.push_back(
        {saf.args.arg(d.attacker).id, saf.args.arg(d.target).id, "style=bold, penwidth=2"});
  emit_edges(out, std::move(rows));
  out << "}\n";
  return out.str();
}

}  // namespace aspic
