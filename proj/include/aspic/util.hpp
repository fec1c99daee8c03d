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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace aspic {

using FormulaId = uint32_t;
using RuleId = uint32_t;
using ArgId = uint32_t;

// Small sorted-unique vectors stand in for sets throughout; domains here are
// tiny and contiguous iteration order is what keeps output byte-stable.
template <typename T>
bool sorted_contains(const std::vector<T>& v, T x) {
  return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
void sorted_insert(std::vector<T>& v, T x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

template <typename T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
bool is_subset(const std::vector<T>& sub, const std::vector<T>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

template <typename T>
bool is_proper_subset(const std::vector<T>& sub, const std::vector<T>& super) {
  return sub.size() < super.size() && is_subset(sub, super);
}

inline uint64_t fnv1a64(const std::string& s, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace aspic
