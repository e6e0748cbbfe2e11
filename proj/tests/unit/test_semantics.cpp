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

#include <algorithm>
#include <iterator>

#include "corpus.hpp"
#include "gtcut/coding.hpp"
#include "gtcut/error.hpp"
#include "gtcut/search.hpp"
#include "gtcut/semantics.hpp"
#include "gtcut/text.hpp"

using namespace gtcut;

namespace {

SentenceUniverse universe_for(const std::vector<Formula>& seeds) {
  std::vector<Formula> all = seeds;
  for (const auto& s : seeds) all.push_back(Formula::negation(s));
  return build_universe(all, 0);
}

bool subset(const CodeSet& a, const CodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Formula T(const Formula& f) { return Formula::truth(quote(f)); }

}  // namespace

TEST_CASE("the operator is monotone") {
  std::mt19937_64 rng(501);
  for (const auto& tu : testing::quantifier_free_universes()) {
    SentenceUniverse u = universe_for(tu.seeds);
    std::vector<Natural> codes;
    for (const auto& [c, f] : u.members) codes.push_back(c);
    for (int i = 0; i < 200; ++i) {
      CodeSet small, large;
      for (const auto& c : codes) {
        auto r = rng() % 3;
        if (r == 0) small.insert(c);
        if (r <= 1) large.insert(c);
      }
      CHECK(subset(kripke_step(small, u), kripke_step(large, u)));
    }
  }
}

TEST_CASE("the least fixed point is saturated and consistent") {
  for (const auto& tu : testing::quantifier_free_universes()) {
    CAPTURE(tu.name);
    SentenceUniverse u = universe_for(tu.seeds);
    FixedPoint fp = least_fixed_point(u);
    CHECK(kripke_step(fp.members, u) == fp.members);
    for (std::size_t i = 1; i < fp.stages.size(); ++i) CHECK(subset(fp.stages[i - 1], fp.stages[i]));
    for (const auto& [c, f] : u.members) {
      Formula neg = Formula::negation(f);
      if (u.contains(neg)) CHECK_FALSE((fp.holds(f) && fp.holds(neg)));
    }
  }
}

TEST_CASE("truth is transparent") {
  for (const auto& tu : testing::quantifier_free_universes()) {
    SentenceUniverse u = universe_for(tu.seeds);
    FixedPoint fp = least_fixed_point(u);
    for (const auto& [c, f] : u.members) {
      Formula t = T(f);
      if (!u.contains(t)) continue;
      CHECK(fp.holds(t) == fp.holds(f));
    }
  }
}

TEST_CASE("norms follow the clauses") {
  Formula a = parse_formula("(= 0 0)");
  Formula b = parse_formula("(= (S 0) (S 0))");
  Formula f = parse_formula("(= (S 0) 0)");
  std::vector<Formula> seeds = {T(T(a)), Formula::conjunction(a, T(b)),
                                Formula::negation(Formula::negation(a)),
                                Formula::negation(T(f)), Formula::negation(T(a))};
  SentenceUniverse u = build_universe(seeds, 0);
  FixedPoint fp = least_fixed_point(u);
  CHECK(fp.norm(parse_formula("(= 0 0)")) == 0u);
  CHECK(fp.norm(Formula::negation(f)) == 0u);
  CHECK(fp.norm(T(a)) == 1u);
  CHECK(fp.norm(T(T(a))) == 2u);
  CHECK(fp.norm(Formula::conjunction(a, T(b))) == 2u);
  CHECK(fp.norm(Formula::negation(Formula::negation(a))) == 1u);
  CHECK(fp.norm(Formula::negation(T(f))) == 1u);
  CHECK_FALSE(fp.norm(Formula::negation(T(a))).has_value());
  CHECK_FALSE(fp.norm(f).has_value());
}

TEST_CASE("the liar and the truth-teller are ungrounded") {
  Formula liar = testing::liar_sentence();
  Formula teller = testing::truth_teller_sentence();
  SentenceUniverse u =
      build_universe({liar, Formula::negation(liar), teller, Formula::negation(teller)}, 0);
  FixedPoint fp = least_fixed_point(u);
  CHECK_FALSE(fp.holds(liar));
  CHECK_FALSE(fp.holds(Formula::negation(liar)));
  CHECK_FALSE(fp.holds(teller));
  CHECK_FALSE(fp.holds(Formula::negation(teller)));
}

TEST_CASE("extending the universe keeps old norms") {
  testing::GeneratorConfig config;
  config.allow_quantifiers = false;
  config.allow_constants = false;
  testing::Generator g(502, config);
  for (int i = 0; i < 50; ++i) {
    std::vector<Formula> seeds = {g.sentence(2), g.sentence(2)};
    SentenceUniverse u = build_universe(seeds, 0);
    FixedPoint fp = least_fixed_point(u);
    seeds.push_back(g.sentence(3));
    SentenceUniverse w = build_universe(seeds, 0);
    FixedPoint wp = least_fixed_point(w);
    for (const auto& [c, n] : fp.norms) CHECK(wp.norms.at(c) == n);
  }
}

TEST_CASE("soundness and completeness on a small universe") {
  Formula a = parse_formula("(= 0 0)");
  SentenceUniverse u = universe_for({T(a), T(T(a)), testing::liar_sentence()});
  FixedPoint fp = least_fixed_point(u);
  SearchBudget b;
  SearchResult r = search_cut_free(PlainSequent{{}, {T(T(a))}}, b, SystemId::kLPTN);
  REQUIRE(r.found());
  SoundnessVerdict v = check_soundness(*r.proof, fp, u);
  CHECK(v.holds);
  CHECK(v.norm <= v.length);

  CompletenessVerdict c = check_completeness(T(T(a)), fp, u);
  CHECK(c.status == CompletenessStatus::kFound);
  CHECK(c.proof.has_value());
  CompletenessVerdict n = check_completeness(testing::liar_sentence(), fp, u);
  CHECK(n.status == CompletenessStatus::kVacuous);
}

TEST_CASE("soundness errors") {
  Formula a = parse_formula("(= 0 0)");
  SentenceUniverse u = build_universe({a}, 0);
  FixedPoint fp = least_fixed_point(u);
  SearchBudget b;
  SearchResult r = search_cut_free(parse_sequent("=> (= (S 0) (S 0))"), b, SystemId::kLPTN);
  REQUIRE(r.found());
  try {
    check_soundness(*r.proof, fp, u);
    FAIL("expected a coverage gap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCoverageGap);
  }
}

TEST_CASE("universe size limit") {
  testing::Generator g(503);
  std::vector<Formula> seeds;
  for (int i = 0; i < 50; ++i) seeds.push_back(g.sentence(3));
  try {
    build_universe(seeds, 3, 10);
    FAIL("expected the size limit to trip");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUniverseTooLarge);
  }
}
