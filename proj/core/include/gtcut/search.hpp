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


#ifndef GTCUT_SEARCH_HPP_
#define GTCUT_SEARCH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gtcut/derivation.hpp"
#include "gtcut/kernel.hpp"

namespace gtcut {

struct SearchBudget {
  std::size_t max_depth = 8;
  // Largest numeral tried when instantiating a universal formula.
  std::size_t max_term_index = 3;
  // Truth-rule applications allowed along one branch.
  std::size_t max_tau_unfold = 4;
  // Hard cap on visited goals, to keep a single call bounded.
  std::size_t max_goals = 200'000;
};

struct FrontierLeaf {
  std::string sequent;
  std::string reason;
};

struct SearchResult {
  std::optional<Derivation> proof;
  // Unproved leaves met during an exhausted search, first ones only.
  std::vector<FrontierLeaf> frontier;
  std::size_t goals = 0;

  bool found() const { return proof.has_value(); }
};

// Backward cut-free search. Invertible rules are applied eagerly, universal
// formulas on the left are instantiated with the numerals up to the budget
// and the closed subterms and free variables of the goal. In the arithmetic
// systems closed identities are settled by `arithmetic_closure`, and a goal
// outside the arithmetic language is exhausted at once.
SearchResult search_cut_free(const PlainSequent& goal, const SearchBudget& budget,
                             SystemId system);

// Proves a sequent with a true closed identity s = t on the right or a false
// one on the left, using only the equality and geometric rules. The proof is
// a chain of antecedent additions closed by an identity axiom or by (Qg1).
std::optional<Derivation> arithmetic_closure(const Sequent& goal, IdAllocator& ids);

struct ConservativityEntry {
  PlainSequent sequent;
  bool in_lptn = false;
  bool in_qg = false;
};

struct ConservativityReport {
  std::vector<ConservativityEntry> entries;
  std::size_t asymmetric() const;
};

// Searches each T-free sequent in LPT^N and in Q^g and compares.
ConservativityReport check_conservativity(const std::vector<PlainSequent>& corpus,
                                          const SearchBudget& budget);

}  // namespace gtcut

#endif  // GTCUT_SEARCH_HPP_
