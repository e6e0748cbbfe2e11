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


#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "gtcut/coding.hpp"
#include "gtcut/error.hpp"
#include "gtcut/text.hpp"

using namespace gtcut;

namespace {

Formula F(std::string_view s) { return parse_formula(s); }
Term num(const Natural& n) { return Term::numeral(n); }
Term fn(FunctionSymbol s, std::vector<Term> args) { return Term::function(s, std::move(args)); }

}  // namespace

TEST_CASE("encoding is injective on a large corpus") {
  testing::Generator g(2024);
  std::set<Formula, FormulaLess> corpus;
  while (corpus.size() < 10000) corpus.insert(g.formula(3));
  std::set<Natural> codes;
  for (const auto& f : corpus) {
    Natural c = encode(f).value;
    codes.insert(c);
    CHECK(decode_formula(c) == f);
  }
  CHECK(codes.size() == corpus.size());
}

TEST_CASE("terms and formulas have separate codes") {
  CHECK(encode(Term::zero()).value != encode(F("(= 0 0)")).value);
  CHECK(std::holds_alternative<Term>(decode(encode(Term::variable("x")).value)));
  CHECK_THROWS_AS(decode(Natural(0)), Error);
  CHECK_THROWS_AS(decode_formula(encode(Term::zero()).value), Error);
}

TEST_CASE("syntax functions commute with the operations they name") {
  testing::GeneratorConfig config;
  config.variables = {"a"};
  testing::Generator g(31, config);
  for (int i = 0; i < 300; ++i) {
    Formula a = g.formula(2);
    Formula b = g.formula(2);
    const Natural ca = encode(a).value;
    const Natural cb = encode(b).value;
    CHECK(eval_term(fn(FunctionSymbol::kAndDot, {num(ca), num(cb)})) ==
          encode(Formula::conjunction(a, b)).value);
    CHECK(eval_term(fn(FunctionSymbol::kNegDot, {num(ca)})) == encode(Formula::negation(a)).value);
    const Natural cv = encode(Term::variable("a")).value;
    CHECK(eval_term(fn(FunctionSymbol::kAllDot, {num(ca), num(cv)})) ==
          encode(Formula::forall("a", a)).value);
    if (free_variables(a).contains("a")) {
      Term by = g.closed_term(1);
      CHECK(eval_term(fn(FunctionSymbol::kSub, {num(ca), num(cv), num(encode(by).value)})) ==
            encode(substitute(a, "a", by)).value);
    }
  }
}

TEST_CASE("numerals, truth codes and evaluation") {
  CHECK(eval_term(fn(FunctionSymbol::kNum, {num(3)})) == encode(num(3)).value);
  const Natural c = encode(F("(= 0 0)")).value;
  CHECK(eval_term(fn(FunctionSymbol::kTDot, {num(c)})) == encode(Formula::truth(num(c))).value);
  CHECK(eval_term(fn(FunctionSymbol::kTr, {num(c), num(0)})) == c);
  CHECK(eval_term(fn(FunctionSymbol::kTr, {num(c), num(2)})) ==
        encode(F("(T (quote (T (quote (= 0 0)))))")).value);
  CHECK(eval_term(fn(FunctionSymbol::kEqDot, {num(encode(num(1)).value), num(encode(num(2)).value)})) ==
        encode(F("(= 1 2)")).value);
  Term closed = parse_term("(+ (* 2 3) (S 0))");
  CHECK(eval_term(closed) == 7);
  CHECK(eval_term(fn(FunctionSymbol::kVal, {num(encode(closed).value)})) == 7);
  CHECK(canonical_term(parse_term("(+ x (* 2 3))")) == parse_term("(+ x 6)"));
  CHECK_THROWS_AS(eval_term(Term::variable("x")), Error);
  CHECK_THROWS_AS(eval_term(fn(FunctionSymbol::kNegDot, {num(4)})), Error);
}

TEST_CASE("quote names the code") {
  Formula f = F("(not (= 0 1))");
  CHECK(quote(f).is_numeral());
  CHECK(decode_formula(quote(f).value()) == f);
  CHECK(parse_formula("(T (quote (not (= 0 1))))") == Formula::truth(quote(f)));
}

TEST_CASE("diagonal sentences satisfy their equation") {
  testing::GeneratorConfig config;
  config.variables = {"v"};
  testing::Generator g(8, config);
  int tried = 0;
  for (int i = 0; i < 400 && tried < 100; ++i) {
    Formula phi = g.formula(2);
    if (free_variables(phi) != VariableSet{"v"}) continue;
    ++tried;
    Diagonal d = diagonalize(phi);
    CHECK(eval_term(d.name) == encode(d.sentence).value);
    CHECK(d.sentence == substitute(phi, "v", d.name));
    CHECK(decode_formula(eval_term(d.name)) == d.sentence);
  }
  CHECK(tried > 20);
}

TEST_CASE("the liar and the truth-teller") {
  Formula liar = testing::liar_sentence();
  REQUIRE(liar.kind() == FormulaKind::kNot);
  const Term& name = liar.operand().name();
  CHECK(decode_formula(eval_term(name)) == liar);
  Formula teller = testing::truth_teller_sentence();
  REQUIRE(teller.kind() == FormulaKind::kTruth);
  CHECK(decode_formula(eval_term(teller.name())) == teller);
  CHECK_THROWS_AS(diagonalize(F("(= 0 0)")), Error);
  CHECK_THROWS_AS(diagonalize(F("(= x y)")), Error);
}
