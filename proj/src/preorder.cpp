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

#include "aspic/preorder.hpp"

#include <utility>

namespace aspic {

void Preorder::add_element(uint32_t e) {
  if (index_.count(e)) return;
  index_[e] = static_cast<int>(elems_.size());
  elems_.push_back(e);
  closed_ = false;
}

void Preorder::add_leq(uint32_t a, uint32_t b) {
  add_element(a);
  add_element(b);
  std::pair<uint32_t, uint32_t> pair{a, b};
  for (auto& d : declared_)
    if (d == pair) return;
  declared_.push_back(pair);
  closed_ = false;
}

void Preorder::close() {
  size_t n = elems_.size();
  leq_.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i) leq_[i][i] = 1;
  for (auto& [a, b] : declared_) leq_[at(a)][at(b)] = 1;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (leq_[k][j]) leq_[i][j] = 1;
    }
  closed_ = true;
}

int Preorder::at(uint32_t e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw UnknownElement("element not registered in preorder");
  return it->second;
}

bool Preorder::leq(uint32_t a, uint32_t b) const {
  if (!closed_) throw Error("preorder queried before close()");
  return leq_[at(a)][at(b)] != 0;
}

}  // namespace aspic
