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

#include "aspic/formula.hpp"

#include <cctype>

namespace aspic {

namespace {
bool valid_atom(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}
}  // namespace

FormulaId Language::put(std::string display, std::optional<LiteralShape> shape) {
  auto it = index_.find(display);
  if (it != index_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(displays_.size());
  index_.emplace(display, id);
  displays_.push_back(std::move(display));
  shapes_.push_back(std::move(shape));
  return id;
}

FormulaId Language::intern_literal(const std::string& text) {
  LiteralShape sh;
  size_t i = 0;
  if (i < text.size() && text[i] == '~') {
    sh.weak_neg = true;
    ++i;
  }
  if (i < text.size() && text[i] == '-') {
    sh.strong_neg = true;
    ++i;
  }
  sh.atom = text.substr(i);
  if (!valid_atom(sh.atom))
    throw Error("not a well-formed literal: '" + text + "'");
  std::string display = std::string(sh.weak_neg ? "~" : "") + (sh.strong_neg ? "-" : "") + sh.atom;
  return put(display, sh);
}

FormulaId Language::intern_opaque(const std::string& display) {
  if (display.empty()) throw Error("empty formula");
  return put(display, std::nullopt);
}

std::optional<FormulaId> Language::find(const std::string& display) const {
  auto it = index_.find(display);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FormulaId> Language::strong_flip(FormulaId f) {
  const auto& sh = shapes_.at(f);
  if (!sh || sh->weak_neg) return std::nullopt;
  LiteralShape flipped = *sh;
  flipped.strong_neg = !sh->strong_neg;
  std::string display = std::string(flipped.strong_neg ? "-" : "") + flipped.atom;
  return put(display, flipped);
}

const std::vector<FormulaId> Contrariness::empty_;

void Contrariness::declare(FormulaId phi, FormulaId psi) {
  auto& v = con_[psi];
  for (FormulaId x : v)
    if (x == phi) return;
  v.push_back(phi);
}

bool Contrariness::in_con(FormulaId phi, FormulaId psi) const {
  auto it = con_.find(psi);
  if (it == con_.end()) return false;
  for (FormulaId x : it->second)
    if (x == phi) return true;
  return false;
}

bool Contrariness::is_contrary(FormulaId phi, FormulaId psi) const {
  return in_con(phi, psi) && !in_con(psi, phi);
}

bool Contrariness::is_contradictory(FormulaId phi, FormulaId psi) const {
  return in_con(phi, psi) && in_con(psi, phi);
}

std::optional<FormulaId> Contrariness::designated_contradictory(FormulaId f) const {
  auto it = con_.find(f);
  if (it == con_.end()) return std::nullopt;
  for (FormulaId phi : it->second)
    if (in_con(f, phi)) return phi;
  return std::nullopt;
}

const std::vector<FormulaId>& Contrariness::cons_of(FormulaId psi) const {
  auto it = con_.find(psi);
  return it == con_.end() ? empty_ : it->second;
}

}  // namespace aspic
