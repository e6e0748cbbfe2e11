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

#ifndef GTCUT_MEASURES_HPP_
#define GTCUT_MEASURES_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gtcut/derivation.hpp"

namespace gtcut {

struct Measures {
  std::size_t length = 0;
  std::size_t cut_rank = 0;
  std::size_t proof_tau = 0;
  // T-complexity of every occurrence in the derivation, by id.
  std::map<OccId, std::size_t> tau;

  std::size_t tau_of(OccId id) const;
};

// Length, cut rank and T-complexities. Throws ErrorCode::kBrokenLineage when
// a conclusion occurrence has no ancestor record or an ancestor does not
// carry the same formula.
Measures compute_measures(const Derivation& d);

std::size_t derivation_length(const Derivation& d);
std::size_t cut_rank(const Derivation& d);

// Ancestry of an occurrence: its premise counterparts, recursively. For a
// principal occurrence these are the active occurrences it was built from.
struct Ancestry {
  OccId id = 0;
  Formula formula = Formula::top();
  std::string path;  // node path where the occurrence lives
  std::vector<Ancestry> ancestors;
};

// Throws ErrorCode::kUnknownOccurrence when `id` is not in the end-sequent.
Ancestry occurrence_lineage(const Derivation& d, OccId id);

// hyperexp(0, n) = n, hyperexp(j + 1, n) = 2^hyperexp(j, n). Saturates at
// `cap` to stay finite.
Natural hyperexp(std::size_t j, const Natural& n,
                 const Natural& cap = Natural(1) << 4096);

}  // namespace gtcut

#endif  // GTCUT_MEASURES_HPP_
