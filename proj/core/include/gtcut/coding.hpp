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

#ifndef GTCUT_CODING_HPP_
#define GTCUT_CODING_HPP_

#include <variant>

#include "gtcut/syntax.hpp"

namespace gtcut {

using Expression = std::variant<Term, Formula>;

// A Goedel number together with the numeral naming it.
struct Code {
  Natural value;
  Term numeral() const { return Term::numeral(value); }
};

// The code of an expression is the big-endian base-256 reading of the bytes
// of its canonical printing. Distinct expressions print differently and the
// leading byte is never zero, so the map is injective.
Code encode(const Term& t);
Code encode(const Formula& f);

// Throws ErrorCode::kNotACode unless `code` is in the image of encode.
Expression decode(const Natural& code);
Formula decode_formula(const Natural& code);
Term decode_term(const Natural& code);

// Numeral naming a formula: numeral(#f).
Term quote(const Formula& f);

// Largest m accepted by tr(n, m).
inline constexpr unsigned kMaxTruthIteration = 10;

// Value of a closed term in the standard model. Throws kOpenTerm on free
// variables and kNotACode when a syntax function receives a non-code.
Natural eval_term(const Term& t);

// Replaces closed subterms by their numeral values (canonical names).
Term canonical_term(const Term& t);

struct Diagonal {
  Formula sentence;  // lambda
  Term name;         // closed term with eval_term(name) == #lambda
};

// For phi with exactly one free variable v, builds lambda and a closed term
// name such that lambda == phi(name/v) and name evaluates to #lambda. Throws
// kWrongFreeVariables otherwise.
Diagonal diagonalize(const Formula& phi);

}  // namespace gtcut

#endif  // GTCUT_CODING_HPP_
