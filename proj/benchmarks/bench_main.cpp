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


#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gtcut/coding.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/measures.hpp"
#include "gtcut/script.hpp"
#include "gtcut/search.hpp"
#include "gtcut/semantics.hpp"
#include "gtcut/text.hpp"
#include "gtcut/transform.hpp"

namespace {

using namespace gtcut;

// phi, nested `depth` times under T.
Formula tower(std::size_t depth) {
  Formula f = parse_formula("(= (+ (S 0) (S 0)) (S (S 0)))");
  for (std::size_t i = 0; i < depth; ++i) f = Formula::truth(quote(f));
  return f;
}

constexpr const char* kCutScript =
    "1: ref [] (= 0 0) => (= 0 0), (= 0 0)\n"
    "2: ref [] (= 0 0) => (= 0 0), (= 0 0)\n"
    "3: andr [1 2] (= 0 0) => (= 0 0), (and (= 0 0) (= 0 0))\n"
    "4: ref [] (= 0 0), (= 0 0), (= 0 0) => (= 0 0)\n"
    "5: andl [4] (and (= 0 0) (= 0 0)), (= 0 0) => (= 0 0)\n"
    "6: cut [3 5] (= 0 0) => (= 0 0)\n";

void BM_EncodeDecode(benchmark::State& state) {
  Formula f = tower(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Code c = encode(f);
    benchmark::DoNotOptimize(decode_formula(c.value));
  }
}
BENCHMARK(BM_EncodeDecode)->DenseRange(0, 3);

void BM_SearchTower(benchmark::State& state) {
  PlainSequent goal{{}, {tower(static_cast<std::size_t>(state.range(0)))}};
  SearchBudget b;
  b.max_depth = 16;
  b.max_tau_unfold = 8;
  for (auto _ : state) benchmark::DoNotOptimize(search_cut_free(goal, b, SystemId::kLPTN));
}
BENCHMARK(BM_SearchTower)->DenseRange(0, 4);

void BM_CheckSearched(benchmark::State& state) {
  PlainSequent goal{{}, {tower(static_cast<std::size_t>(state.range(0)))}};
  SearchBudget b;
  b.max_depth = 16;
  b.max_tau_unfold = 8;
  Derivation d = *search_cut_free(goal, b, SystemId::kLPTN).proof;
  for (auto _ : state) benchmark::DoNotOptimize(check(d, SystemId::kLPTN));
}
BENCHMARK(BM_CheckSearched)->DenseRange(0, 4);

void BM_EliminateCut(benchmark::State& state) {
  Derivation d = read_proof(kCutScript);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_cuts(d));
}
BENCHMARK(BM_EliminateCut);

void BM_LiarSearch(benchmark::State& state) {
  Formula liar = diagonalize(Formula::negation(Formula::truth(Term::variable("v")))).sentence;
  SearchBudget b;
  b.max_depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_cut_free(PlainSequent{{}, {liar}}, b, SystemId::kLGT));
  }
}
BENCHMARK(BM_LiarSearch)->DenseRange(2, 10, 4);

void BM_FixedPoint(benchmark::State& state) {
  std::vector<Formula> seeds;
  for (std::size_t i = 0; i < static_cast<std::size_t>(state.range(0)); ++i) {
    seeds.push_back(tower(i));
    seeds.push_back(Formula::negation(tower(i)));
  }
  SentenceUniverse u = build_universe(seeds, 0);
  for (auto _ : state) benchmark::DoNotOptimize(least_fixed_point(u));
  state.counters["universe"] = static_cast<double>(u.size());
}
BENCHMARK(BM_FixedPoint)->DenseRange(1, 7, 2);

}  // namespace

BENCHMARK_MAIN();
