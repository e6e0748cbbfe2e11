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
#include "gtcut/error.hpp"
#include "gtcut/syntax.hpp"
#include "gtcut/text.hpp"

using namespace gtcut;

namespace {

Formula F(std::string_view s) { return parse_formula(s); }
Term t(std::string_view s) { return parse_term(s); }

}  // namespace

TEST_CASE("numerals are compact successors") {
  CHECK(Term::successor(Term::successor(Term::zero())) == Term::numeral(2));
  CHECK(t("(S (S 0))") == t("2"));
  CHECK(print(t("(S (S 0))")) == "2");
  CHECK(t("(S x)") != t("(S y)"));
}

TEST_CASE("printing and parsing round trip") {
  testing::Generator g(5);
  for (int i = 0; i < 500; ++i) {
    Formula f = g.formula(3);
    CHECK(parse_formula(print(f)) == f);
  }
}

TEST_CASE("defined connectives unfold") {
  CHECK(F("(or (= 0 0) (= 1 1))") ==
        F("(not (and (not (= 0 0)) (not (= 1 1))))"));
  CHECK(F("(exists x (= x 0))") == F("(not (forall x (not (= x 0))))"));
}

TEST_CASE("logical complexity: atoms are zero, connectives add one") {
  CHECK(logical_complexity(F("(= 0 0)")) == 0);
  CHECK(logical_complexity(F("(T 5)")) == 0);
  CHECK(logical_complexity(F("top")) == 0);
  CHECK(logical_complexity(F("(not (= 0 0))")) == 1);
  CHECK(logical_complexity(F("(and (not (= 0 0)) (= 0 0))")) == 2);
  CHECK(logical_complexity(F("(forall x (not (= x 0)))")) == 2);
}

TEST_CASE("substitution keeps logical complexity") {
  testing::Generator g(17);
  for (int i = 0; i < 1000; ++i) {
    Formula f = g.formula(3);
    for (const auto& v : free_variables(f)) {
      Term by = g.closed_term(2);
      CHECK(logical_complexity(substitute(f, v, by)) == logical_complexity(f));
    }
  }
}

TEST_CASE("substitution respects binders") {
  Formula f = F("(and (= x 0) (forall x (= x y)))");
  CHECK(substitute(f, "x", t("5")) == F("(and (= 5 0) (forall x (= x y)))"));
  CHECK(substitute(f, "y", t("(S z)")) == F("(and (= x 0) (forall x (= x (S z))))"));
  CHECK_THROWS_AS(substitute(f, "y", t("x")), Error);
  try {
    substitute(f, "y", t("x"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCaptureViolation);
  }
}

TEST_CASE("free and bound variables") {
  Formula f = F("(and (= x y) (forall y (T (+ y z))))");
  CHECK(free_variables(f) == VariableSet{"x", "y", "z"});
  CHECK(bound_variables(f) == VariableSet{"y"});
  CHECK(F("(forall x (= x x))").is_sentence());
  CHECK_FALSE(F("(= x 0)").is_sentence());
}

TEST_CASE("instances are matched against patterns") {
  Formula body = F("(= (+ x 1) y)");
  auto s = match_instance(body, "x", F("(= (+ (S 0) 1) y)"), t("x"));
  REQUIRE(s);
  CHECK(*s == t("1"));
  CHECK_FALSE(match_instance(body, "x", F("(= (+ 1 1) z)"), t("x")));
  auto vac = match_instance(F("(= 0 0)"), "x", F("(= 0 0)"), t("7"));
  REQUIRE(vac);
  CHECK(*vac == t("7"));
}

TEST_CASE("replacement of some occurrences") {
  CHECK(replaces(F("(= a a)"), F("(= b a)"), t("a"), t("b")));
  CHECK(replaces(F("(= a a)"), F("(= a a)"), t("a"), t("b")));
  CHECK(replaces(F("(= (S a) 0)"), F("(= (S b) 0)"), t("a"), t("b")));
  CHECK_FALSE(replaces(F("(= a a)"), F("(= c a)"), t("a"), t("b")));
  // Numerals stand for iterated successors of 0.
  CHECK(replaces(F("(= 2 0)"), F("(= (S x) 0)"), t("1"), t("x")));
}

TEST_CASE("fresh variables avoid the given names") {
  VariableSet avoid{"w", "w1", "w2"};
  std::string v = fresh_variable(avoid);
  CHECK_FALSE(avoid.contains(v));
  CHECK(is_variable_name(v));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_formula("(= 0"), Error);
  CHECK_THROWS_AS(parse_formula("(foo 0 0)"), Error);
  CHECK_THROWS_AS(parse_term("(S 0 0)"), Error);
  try {
    parse_formula("(and (= 0 0) (= 0 ))");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}
