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

#include "aspic/af.hpp"
#include "aspic/postulate.hpp"
#include "aspic/saf.hpp"

namespace aspic {

// All emitters produce deterministic bytes for a fixed input: members are
// ordered, arguments keyed by stable ids.
std::string arguments_json(const StructuredAF& saf);
std::string attacks_json(const StructuredAF& saf);
std::string solve_json(const StructuredAF& saf, const FrameworkView& view,
                       const ExtensionSet& exts,
                       const std::vector<std::pair<std::string, std::string>>& extra_meta = {});
std::string well_defined_json(const WellDefinedReport& rep, FrameworkMode mode);
std::string postulates_json(const PostulateReport& rep, const ArgumentSet& args);

// Best-effort human tables; the JSON emitters are the stable contract.
std::string arguments_text(const StructuredAF& saf);
std::string attacks_text(const StructuredAF& saf);
std::string solve_text(const StructuredAF& saf, const FrameworkView& view,
                       const ExtensionSet& exts);

}  // namespace aspic
