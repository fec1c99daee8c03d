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

#include <string>

#include "aspic/saf.hpp"

namespace aspic {

/// Combined graph: solid attack edges labeled by kind, bold defeat edges.
std::string dot_combined(const StructuredAF& saf);
/// Single-relation panels, the figure convention of one graph per file.
std::string dot_attacks(const StructuredAF& saf);
std::string dot_defeats(const StructuredAF& saf);

}  // namespace aspic
