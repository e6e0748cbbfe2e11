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

#include <string>

#include "corpus.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/script.hpp"
#include "gtcut/text.hpp"

using namespace gtcut;

namespace {

ValidationReport run(std::string_view script, SystemId s) { return check(read_proof(script), s); }

bool only(const ValidationReport& r, std::string_view code) {
  if (r.violations.empty()) return false;
  for (const auto& v : r.violations) {
    if (v.reason != code) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("golden kernel corpus") {
  for (const auto& g : testing::load_golden(GTCUT_TEST_DATA_DIR "/kernel")) {
    CAPTURE(g.path.filename().string());
    ValidationReport r = check(read_proof(g.text), g.system);
    std::set<std::string> codes;
    for (const auto& v : r.violations) codes.insert(v.reason);
    if (g.expected == std::vector<std::string>{"VALID"}) {
      CHECK(r.valid());
    } else {
      CHECK(std::vector<std::string>(codes.begin(), codes.end()) == g.expected);
    }
  }
}

TEST_CASE("identity sequents for the base language") {
  testing::GeneratorConfig config;
  config.max_formula_depth = 5;
  testing::Generator g(101, config);
  for (int i = 0; i < 400; ++i) {
    Formula phi = g.formula(1 + g.below(5));
    if (logical_complexity(phi) > 6) continue;
    IdAllocator ids;
    testing::Builder b(ids);
    PlainSequent ctx{{g.atom()}, {g.atom()}};
    Derivation d = b.identity(phi, ctx);
    CAPTURE(print(phi));
    CHECK(check(d, SystemId::kLGT).valid());
  }
}

TEST_CASE("identity sequents for arithmetic formulas in LPT^N") {
  testing::GeneratorConfig config;
  config.allow_constants = false;
  config.max_formula_depth = 5;
  testing::Generator g(202, config);
  for (int i = 0; i < 400; ++i) {
    Formula phi = g.formula(1 + g.below(5));
    if (logical_complexity(phi) > 6) continue;
    IdAllocator ids;
    testing::Builder b(ids);
    Derivation d = b.identity(phi, {});
    CAPTURE(print(phi));
    CHECK(check(d, SystemId::kLPTN).valid());
    if (!phi.contains_truth()) CHECK(check(d, SystemId::kQg).valid());
  }
}

TEST_CASE("T-free LGT proofs only lose the constant axioms in Q^g") {
  testing::GeneratorConfig config;
  config.allow_truth = false;
  testing::Generator g(303, config);
  int with_constants = 0;
  for (int i = 0; i < 500; ++i) {
    Derivation d = g.proof();
    REQUIRE(check(d, SystemId::kLGT).valid());
    ValidationReport r = check(d, SystemId::kQg);
    for (const auto& v : r.violations) {
      CAPTURE(v.detail);
      CHECK(v.reason == reason::kRuleNotInSystem);
      const Derivation* n = subderivation(d, v.path);
      REQUIRE(n);
      CHECK((n->rule() == Rule::kTopAxiom || n->rule() == Rule::kBotAxiom));
    }
    if (!r.valid()) ++with_constants;
  }
  CHECK(with_constants > 0);
}

TEST_CASE("generated proofs never conclude the empty sequent") {
  testing::Generator g(404);
  for (int i = 0; i < 500; ++i) {
    CHECK_FALSE(g.proof().conclusion().empty());
    CHECK_FALSE(g.proof_with_cuts(1, 2, 2).conclusion().empty());
  }
}

TEST_CASE("geometric rules") {
  CHECK(run("1: ref [] (= a b), (= b 0), (= a 0) => (= a 0)\n"
            "2: eq2 [1] (= a b), (= b 0) => (= a 0)\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= (S a) (S b)), (= a b) => (= a b)\n"
            "2: qg2 [1] (= (S a) (S b)) => (= a b)\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= c c), (= a 0) => (= c c)\n"
            "2: ref [] (= c c), (= y (S a)) => (= c c)\n"
            "3: qg3 [1 2] (= c c) => (= c c)\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= (+ a (S b)) (S (+ a b))) => (= (+ a (S b)) (S (+ a b)))\n"
            "2: qg5 [1] => (= (+ a (S b)) (S (+ a b)))\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= (+ 2 3) (S (+ 2 2))) => (= (+ 2 3) (S (+ 2 2)))\n"
            "2: qg5 [1] => (= (+ 2 3) (S (+ 2 2)))\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= (* a 0) 0) => (= (* a 0) 0)\n"
            "2: qg6 [1] => (= (* a 0) 0)\n",
            SystemId::kQg)
            .valid());
  CHECK(run("1: ref [] (= (* a (S b)) (+ (* a b) a)) => (= (* a (S b)) (+ (* a b) a))\n"
            "2: qg7 [1] => (= (* a (S b)) (+ (* a b) a))\n",
            SystemId::kQg)
            .valid());
  CHECK(only(run("1: ref [] (= (S a) (S b)), (= a c) => (= a c)\n"
                 "2: qg2 [1] (= (S a) (S b)) => (= a c)\n",
                 SystemId::kQg),
             reason::kGeometricMismatch));
  CHECK(only(run("1: ref [] (= c c), (= a 0) => (= c c)\n"
                 "2: ref [] (= c c), (= y (S a)) => (= c c)\n"
                 "3: qg3 [1 2] (= c c) => (= c c)\n"
                 "4: ref [] (= c c), (= a 0) => (= c c)\n"
                 "5: ref [] (= c c), (= y (S a)) => (= c c)\n"
                 "6: qg3 [4 5] (= c c) => (= c c)\n"
                 "7: andr [3 6] (= c c) => (and (= c c) (= c c))\n",
                 SystemId::kQg),
             reason::kEigenvarReused));
}

TEST_CASE("the compositional rule needs its flag") {
  const char* script =
      "1: ref [] (= 0 0) => (= 0 0)\n"
      "2: ref [] (= 0 0) => (= 0 0)\n"
      "3: comp [1 2] (= 0 0) => (T (anddot (quote (= 0 0)) (quote (= 0 0))))\n";
  CHECK(check_lptn(read_proof(script), true).valid());
  ValidationReport plain = check_lptn(read_proof(script), false);
  CHECK(plain.has(reason::kRuleNotInSystem));
}

TEST_CASE("truth atoms are never initial, in any system") {
  const char* script = "1: ref [] (T (quote (= 0 0))) => (T (quote (= 0 0)))\n";
  for (SystemId s : {SystemId::kLGT, SystemId::kLPTN, SystemId::kLPTNComp}) {
    CHECK(run(script, s).has(reason::kRefMinusTPrincipal));
  }
}

TEST_CASE("structural defects") {
  IdAllocator ids;
  testing::Builder b(ids);
  Derivation d = b.identity(parse_formula("(= 0 0)"), {});
  // Reuse an id of the premise in the conclusion of a second node.
  Derivation twice = make_node(DerivationNode{Rule::kNegRight,
                                              Sequent{{}, {d.conclusion().succ[0],
                                                           {parse_formula("(not (= 0 0))"), d.conclusion().ante[0].id}}},
                                              {d},
                                              {d.conclusion().ante[0].id},
                                              {{d.conclusion().ante[0].id}},
                                              {},
                                              {{d.conclusion().succ[0].id, {d.conclusion().succ[0].id}}}});
  CHECK(check(twice, SystemId::kLGT).has(reason::kDuplicateOccId));

  // A premise occurrence without a descendant is a dropped context formula.
  Derivation wide = b.identity(parse_formula("(= 0 0)"), {{parse_formula("(= 1 1)")}, {}});
  DerivationNode m;
  m.rule = Rule::kNegRight;
  OccId p = ids.fresh();
  OccId keep = ids.fresh();
  m.conclusion.succ = {{parse_formula("(= 0 0)"), keep}, {parse_formula("(not (= 0 0))"), p}};
  m.premises = {wide};
  m.principal = {p};
  m.active = {{wide.conclusion().ante.back().id}};
  m.lineage[keep] = {wide.conclusion().succ.back().id};
  CHECK(check(make_node(m), SystemId::kLGT).has(reason::kContextMismatch));

  // No ancestor record.
  m.lineage.clear();
  CHECK(check(make_node(m), SystemId::kLGT).has(reason::kLineageBroken));
}

TEST_CASE("language of the arithmetic systems") {
  CHECK(in_language(parse_formula("(forall x (= (+ x 0) x))"), SystemId::kQg));
  CHECK_FALSE(in_language(parse_formula("(= (num 0) 0)"), SystemId::kLPTN));
  CHECK(in_language(parse_formula("(= (num 0) 0)"), SystemId::kLGT));
  Formula comp = parse_formula("(T (anddot 1 2))");
  CHECK(in_language(comp, SystemId::kLPTNComp));
  CHECK_FALSE(in_language(comp, SystemId::kLPTN));
  CHECK(run("1: ref [] (= (num 0) 0) => (= (num 0) 0)\n", SystemId::kQg)
            .has(reason::kNonArithmeticTerm));
}

TEST_CASE("predecessors") {
  CHECK(predecessor(parse_term("(S x)")) == parse_term("x"));
  CHECK(predecessor(parse_term("3")) == parse_term("2"));
  CHECK_FALSE(predecessor(parse_term("0")));
  CHECK_FALSE(predecessor(parse_term("(+ 1 1)")));
}
