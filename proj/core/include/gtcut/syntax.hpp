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

#ifndef GTCUT_SYNTAX_HPP_
#define GTCUT_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtcut/error.hpp"

namespace gtcut {

using Natural = boost::multiprecision::cpp_int;

enum class TermKind : std::uint8_t {
  kVariable,
  kNumeral,
  kSuccessor,
  kPlus,
  kTimes,
  kFunction,
};

// Primitive recursive syntax operations on codes.
enum class FunctionSymbol : std::uint8_t {
  kNum,     // n -> #(numeral n)
  kSub,     // #e, #v, #t -> #(e(t/v))
  kNegDot,  // #f -> #(not f)
  kAndDot,  // #f, #g -> #(f and g)
  kAllDot,  // #f, #v -> #(forall v f)
  kEqDot,   // #s, #t -> #(s = t)
  kTDot,    // n -> #(T numeral n)
  kTr,      // n, m -> m-fold T iteration over numeral n
  kVal,     // #t -> value of closed term t
};

std::size_t arity(FunctionSymbol symbol);
std::string_view symbol_name(FunctionSymbol symbol);

// Immutable, structurally shared term. Numerals are kept in compact form:
// successor applied to a numeral is normalized to the next numeral, so
// S(S(0)) and numeral(2) are the same value.
class Term {
 public:
  static Term variable(std::string name);
  static Term zero();
  static Term numeral(const Natural& n);
  static Term successor(const Term& t);
  static Term plus(const Term& a, const Term& b);
  static Term times(const Term& a, const Term& b);
  static Term function(FunctionSymbol symbol, std::vector<Term> args);

  TermKind kind() const;
  const std::string& name() const;
  const Natural& value() const;
  FunctionSymbol symbol() const;
  std::span<const Term> children() const;

  bool is_closed() const;
  bool is_numeral() const { return kind() == TermKind::kNumeral; }
  bool is_variable() const { return kind() == TermKind::kVariable; }
  // True when only 0, S, +, * occur.
  bool is_arithmetic() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend int compare(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind : std::uint8_t {
  kEqual,
  kTruth,
  kTop,
  kBottom,
  kNot,
  kAnd,
  kForall,
};

class Formula {
 public:
  static Formula equal(const Term& lhs, const Term& rhs);
  static Formula truth(const Term& name);
  static Formula top();
  static Formula bottom();
  static Formula negation(const Formula& operand);
  static Formula conjunction(const Formula& left, const Formula& right);
  static Formula forall(const std::string& variable, const Formula& body);

  // Defined connectives: not(not a and not b), not forall x not a.
  static Formula disjunction(const Formula& left, const Formula& right);
  static Formula exists(const std::string& variable, const Formula& body);

  FormulaKind kind() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Term& name() const;  // argument of T
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const std::string& variable() const;
  const Formula& body() const;

  // Equalities and truth ascriptions. Top and bottom are not atomic.
  bool is_atomic() const;
  bool contains_truth() const;
  bool is_sentence() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend int compare(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return compare(a, b) < 0;
  }
};

using VariableSet = std::set<std::string>;

VariableSet free_variables(const Term& t);
VariableSet free_variables(const Formula& f);
VariableSet bound_variables(const Formula& f);
// Every variable name occurring anywhere, bound or free.
void collect_variables(const Formula& f, VariableSet& out);
void collect_variables(const Term& t, VariableSet& out);

std::size_t logical_complexity(const Formula& f);

bool occurs(const std::string& variable, const Term& t);

Term substitute(const Term& t, const std::string& variable, const Term& by);
// Replaces the free occurrences of `variable`. Throws
// ErrorCode::kCaptureViolation when a variable of `by` would become bound.
Formula substitute(const Formula& f, const std::string& variable,
                   const Term& by);

// Finds s with substitute(pattern, variable, s) == instance. When the
// variable does not occur free in the pattern any term works; `fallback`
// is returned in that case.
std::optional<Term> match_instance(const Formula& pattern,
                                   const std::string& variable,
                                   const Formula& instance,
                                   const Term& fallback);

// True when `b` arises from `a` by replacing some occurrences of `s` with `t`.
bool replaces(const Formula& a, const Formula& b, const Term& s,
              const Term& t);

// Produces a variable name outside `avoid` built from `stem`.
std::string fresh_variable(const VariableSet& avoid, std::string_view stem = "w");

}  // namespace gtcut

#endif  // GTCUT_SYNTAX_HPP_
