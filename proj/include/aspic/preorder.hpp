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

#include <cstdint>
#include <map>
#include <vector>

#include "aspic/errors.hpp"

namespace aspic {

/// A preorder over uint32 element ids. Declared ≤ pairs are closed under
/// reflexivity and transitivity; X < Y and X ≈ Y are derived. Elements the
/// caller never registered raise UnknownElement when compared.
class Preorder {
 public:
  void add_element(uint32_t e);
  void add_leq(uint32_t a, uint32_t b);  // registers both
  void close();                          // reflexive-transitive closure

  bool has_element(uint32_t e) const { return index_.count(e) != 0; }
  bool leq(uint32_t a, uint32_t b) const;
  bool lt(uint32_t a, uint32_t b) const { return leq(a, b) && !leq(b, a); }
  bool equiv(uint32_t a, uint32_t b) const { return leq(a, b) && leq(b, a); }

  const std::vector<uint32_t>& elements() const { return elems_; }
  // Declared pairs before closure, for printing.
  const std::vector<std::pair<uint32_t, uint32_t>>& declared() const { return declared_; }

 private:
  int at(uint32_t e) const;
  std::vector<uint32_t> elems_;
  std::map<uint32_t, int> index_;
  std::vector<std::pair<uint32_t, uint32_t>> declared_;
  std::vector<std::vector<uint8_t>> leq_;
  bool closed_ = false;
};

}  // namespace aspic
