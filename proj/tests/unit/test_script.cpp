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

#include <json.hpp>

#include "corpus.hpp"
#include "gtcut/error.hpp"
#include "gtcut/export.hpp"
#include "gtcut/measures.hpp"
#include "gtcut/script.hpp"
#include "gtcut/search.hpp"
#include "gtcut/semantics.hpp"
#include "gtcut/text.hpp"
#include "gtcut/transform.hpp"

using namespace gtcut;

namespace {

std::string parse_error(std::string_view text) {
  try {
    read_proof(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scripts round trip") {
  testing::Generator g(601);
  for (int i = 0; i < 300; ++i) {
    Derivation d = g.coin() ? g.proof() : g.proof_with_cuts(1, 2, 2);
    std::string text = print_script(d);
    Derivation e = read_proof(text);
    CHECK(check(e, SystemId::kLGT).valid());
    CHECK(print_script(e) == text);
    CHECK(derivation_length(e) == derivation_length(d));
    CHECK(cut_rank(e) == cut_rank(d));
    // Equal formulas in one sequent are matched by position, so only the
    // re-read proof is a fixed point for the annotated form.
    std::string annotated = print_script(e, true);
    CHECK(print_script(read_proof(annotated), true) == annotated);
  }
}

TEST_CASE("tau annotations are parsed") {
  Script s = parse_script(
      "1: ref [] (= 0 0) => (= 0 0)\n"
      "2: tr [1] (= 0 0) => (T (quote (= 0 0)))\n"
      "#! tau 2 a0=0 s0=1\n");
  REQUIRE(s.nodes.size() == 2);
  REQUIRE(s.annotations.size() == 2);
  CHECK(s.annotations[1].side == Side::kSuccedent);
  CHECK(s.annotations[1].tau == 1);
  CHECK(s.annotations[1].line == 3);
}

TEST_CASE("parse errors carry a position") {
  CHECK(parse_error("1: ref [] (= 0 0) => (= 0 0\n").find("1:") != std::string::npos);
  CHECK(parse_error("1: ref [] (= 0 0) => (= 0 0)\n2: foo [1] => (= 0 0)\n").find("2:") !=
        std::string::npos);
  std::string unknown = parse_error("1: frob [] => (= 0 0)\n");
  CHECK(unknown.find("frob") != std::string::npos);
  CHECK(unknown.find("ref") != std::string::npos);
  CHECK_FALSE(parse_error("1: cut [7 8] => (= 0 0)\n").empty());
  CHECK_FALSE(parse_error("1: ref [] (= 0 0) => (= 0 0)\n1: ref [] (= 0 0) => (= 0 0)\n").empty());
  CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("the root is the last unused node") {
  CHECK_FALSE(parse_error("1: ref [] (= 0 0) => (= 0 0)\n"
                          "2: ref [] (= (S 0) (S 0)) => (= (S 0) (S 0))\n")
                  .empty());
  Derivation d = read_proof(
      "1: ref [] (= 0 0) => (= 0 0)\n"
      "2: negl [1] (= 0 0), (not (= 0 0)) =>\n");
  CHECK(d.rule() == Rule::kNegLeft);
}

TEST_CASE("sentence files") {
  auto v = parse_sentence_file("# comment\n(= 0 0)\n\n(not (= 0 (S 0)))\n");
  REQUIRE(v.size() == 2);
  CHECK(v[1] == parse_formula("(not (= 0 (S 0)))"));
  CHECK_THROWS_AS(parse_sentence_file("(= 0\n"), Error);
}

TEST_CASE("json exports parse") {
  testing::Generator g(602);
  Derivation d = g.proof_with_cuts(1, 2, 2);
  auto j = nlohmann::json::parse(derivation_json(d));
  CHECK(j.is_object());
  auto m = nlohmann::json::parse(measures_json(compute_measures(d)));
  CHECK(m["length"] == derivation_length(d));
  auto r = nlohmann::json::parse(report_json(check(d, SystemId::kLGT)));
  CHECK(r.is_object());
  auto c = nlohmann::json::parse(certificate_json(eliminate_cuts(d).certificate));
  CHECK(c.is_object());
  SearchResult s = search_cut_free(parse_sequent("=> (= 0 0)"), {}, SystemId::kQg);
  CHECK(nlohmann::json::parse(search_json(s)).is_object());
  SentenceUniverse u = build_universe({parse_formula("(= 0 0)")}, 0);
  CHECK(nlohmann::json::parse(fixed_point_json(least_fixed_point(u), u)).is_object());
  CHECK_FALSE(derivation_tree(d).empty());
}
