/* Copyright 2026 The gtcut Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#ifndef GTCUT_EXPORT_HPP_
#define GTCUT_EXPORT_HPP_

#include <string>

#include "gtcut/derivation.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/search.hpp"
#include "gtcut/semantics.hpp"
#include "gtcut/transform.hpp"

namespace gtcut {

// JSON tree: {"rule", "path", "principal", "ante": [{"id","formula","tau"}],
// "succ": [...], "premises": [...]}. Pass indent < 0 for one line.
std::string derivation_json(const Derivation& d, int indent = 2);

// Indented text tree, premises below their conclusion:
//   <path> <rule> | <sequent> | tau a0=.. s0=..
std::string derivation_tree(const Derivation& d);

std::string measures_json(const Measures& m, int indent = 2);
std::string report_json(const ValidationReport& r, int indent = 2);
std::string certificate_json(const Certificate& c, int indent = 2);
std::string search_json(const SearchResult& r, int indent = 2);
std::string fixed_point_json(const FixedPoint& fp, const SentenceUniverse& u, int indent = 2);

}  // namespace gtcut

#endif  // GTCUT_EXPORT_HPP_
