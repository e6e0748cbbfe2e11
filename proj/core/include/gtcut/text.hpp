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

#ifndef GTCUT_TEXT_HPP_
#define GTCUT_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gtcut/syntax.hpp"

namespace gtcut {

// A parenthesized prefix expression with source positions.
struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  bool is_list = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Reads every expression in `text`. Throws ErrorCode::kParse with the
// line and column of the offending character.
std::vector<SExpr> read_sexprs(std::string_view text);
SExpr read_sexpr(std::string_view text);

Term term_from_sexpr(const SExpr& e);
Formula formula_from_sexpr(const SExpr& e);

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

// Canonical printing. parse(print(x)) == x for every term and formula.
std::string print(const Term& t);
std::string print(const Formula& f);

// Accepted variable spellings: a letter or underscore followed by letters,
// digits, underscores or primes, excluding the reserved words.
bool is_variable_name(std::string_view name);

}  // namespace gtcut

#endif  // GTCUT_TEXT_HPP_
