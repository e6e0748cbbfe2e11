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


#ifndef GTCUT_SEMANTICS_HPP_
#define GTCUT_SEMANTICS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gtcut/derivation.hpp"
#include "gtcut/search.hpp"
#include "gtcut/syntax.hpp"

namespace gtcut {

using CodeSet = std::set<Natural>;

// Finite set of sentence codes closed under the decompositions the Kripke
// clauses look at. Quantifiers range over the numerals 0..term_bound.
struct SentenceUniverse {
  std::vector<Formula> seeds;
  std::size_t term_bound = 3;
  std::map<Natural, Formula> members;
  // False when some universal formula was cut down to finitely many
  // instances, so membership is only an approximation.
  bool exact = true;

  bool contains(const Natural& code) const { return members.contains(code); }
  bool contains(const Formula& f) const;
  std::size_t size() const { return members.size(); }
};

SentenceUniverse build_universe(const std::vector<Formula>& seeds, std::size_t term_bound,
                                std::size_t max_size = 100'000);

// One application of the Kripke operator restricted to the universe.
CodeSet kripke_step(const CodeSet& s, const SentenceUniverse& u);

struct FixedPoint {
  CodeSet members;
  // stages[i] is the i-th cumulative stage; the last one is saturated.
  std::vector<CodeSet> stages;
  std::size_t saturation_index = 0;
  std::map<Natural, std::size_t> norms;

  bool holds(const Formula& f) const;
  std::optional<std::size_t> norm(const Formula& f) const;
};

FixedPoint least_fixed_point(const SentenceUniverse& u);

// The end-sequent of a cut-free proof of length n has a member of the
// succedent with norm <= n, or a member of the antecedent whose negation has
// norm <= n. Every end-sequent formula must be in the universe; negations
// of antecedent formulas are added on demand. Throws kCoverageGap otherwise.
struct SoundnessVerdict {
  bool holds = false;
  bool in_antecedent = false;
  std::optional<Formula> witness;
  std::size_t norm = 0;
  std::size_t length = 0;
  std::string detail;
};

SoundnessVerdict check_soundness(const Derivation& d, const FixedPoint& fp,
                                 const SentenceUniverse& u);

enum class CompletenessStatus {
  kFound,          // a proof within norm + slack was found
  kVacuous,        // neither the sentence nor its negation is grounded
  kExcluded,       // quantified, outside the checked fragment
  kBudgetFailure,  // grounded, but no proof within the budget
};

struct CompletenessVerdict {
  CompletenessStatus status = CompletenessStatus::kVacuous;
  bool negative = false;  // the sentence is refuted: phi => was searched
  std::size_t norm = 0;
  std::size_t depth = 0;  // depth budget used
  std::optional<Derivation> proof;
};

CompletenessVerdict check_completeness(const Formula& phi, const FixedPoint& fp,
                                       const SentenceUniverse& u, std::size_t slack = 4,
                                       SystemId system = SystemId::kLPTN);

std::string_view completeness_status_name(CompletenessStatus s);

// Tabular dump: one row per member with its stage of entry.
std::string format_fixed_point(const FixedPoint& fp, const SentenceUniverse& u);

}  // namespace gtcut

#endif  // GTCUT_SEMANTICS_HPP_
