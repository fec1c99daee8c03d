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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspic/errors.hpp"
#include "aspic/util.hpp"

namespace aspic {

/// Shape of a formula in the bundled literal language: an atom with optional
/// strong negation `-` and optional weak negation `~` (weak outermost, over a
/// strong literal only). Formulas outside that grammar are opaque tokens.
struct LiteralShape {
  std::string atom;
  bool strong_neg = false;
  bool weak_neg = false;
};

/// Hash-consed formula store. Equality of formulas is equality of ids.
class Language {
 public:
  // Parses `-a`, `~a`, `~-a`, `a`; rejects nested negation.
  FormulaId intern_literal(const std::string& text);
  // Interns an arbitrary display token without literal structure.
  FormulaId intern_opaque(const std::string& display);

  std::optional<FormulaId> find(const std::string& display) const;
  const std::string& display(FormulaId f) const { return displays_.at(f); }
  const std::optional<LiteralShape>& shape(FormulaId f) const { return shapes_.at(f); }
  size_t size() const { return displays_.size(); }

  // For a strong literal, the literal with strong negation flipped, interning
  // it if needed. Empty for weak literals and opaque formulas.
  std::optional<FormulaId> strong_flip(FormulaId f);

 private:
  FormulaId put(std::string display, std::optional<LiteralShape> shape);
  std::vector<std::string> displays_;
  std::vector<std::optional<LiteralShape>> shapes_;
  std::map<std::string, FormulaId> index_;
};

/// The contrariness function: cons_of(ψ) = the set ψ⁻ of formulas that are a
/// contrary or contradictory of ψ. Classification per ordered pair:
///   φ contradictory of ψ  iff φ ∈ ψ⁻ and ψ ∈ φ⁻
///   φ contrary of ψ       iff φ ∈ ψ⁻ and ψ ∉ φ⁻
class Contrariness {
 public:
  // Declares φ ∈ ψ⁻.
  void declare(FormulaId phi, FormulaId psi);
  bool in_con(FormulaId phi, FormulaId psi) const;  // φ ∈ ψ⁻
  bool is_contrary(FormulaId phi, FormulaId psi) const;
  bool is_contradictory(FormulaId phi, FormulaId psi) const;

  // First-declared mutual partner; used by transposition and c-classicality.
  std::optional<FormulaId> designated_contradictory(FormulaId f) const;

  const std::vector<FormulaId>& cons_of(FormulaId psi) const;

 private:
  // Declaration order is kept so the designated contradictory is stable.
  std::map<FormulaId, std::vector<FormulaId>> con_;
  static const std::vector<FormulaId> empty_;
};

}  // namespace aspic
