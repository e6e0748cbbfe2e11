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

// gtcut: check, measure and transform proof scripts; search for cut-free
// proofs; compute Kripke fixed points.
//
// Exit status: 0 success or valid, 1 violations or exhausted search,
// 2 usage and parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtcut/coding.hpp"
#include "gtcut/export.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/measures.hpp"
#include "gtcut/script.hpp"
#include "gtcut/search.hpp"
#include "gtcut/semantics.hpp"
#include "gtcut/text.hpp"
#include "gtcut/transform.hpp"

namespace {

using namespace gtcut;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Derivation load_proof(const std::string& path) {
  std::string text = slurp(path);
  try {
    return read_proof(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw UsageError(path + ":" + e.what());
    throw;
  }
}

SystemId pick_system(const std::string& name, bool compositional) {
  auto s = system_from_name(name);
  if (!s) throw UsageError("unknown system '" + name + "' (lgt, qg, lptn, lptn_comp)");
  if (compositional) {
    if (*s != SystemId::kLPTN && *s != SystemId::kLPTNComp) {
      throw UsageError("--compositional only applies to lptn");
    }
    return SystemId::kLPTNComp;
  }
  return *s;
}

void print_violations(const ValidationReport& r) {
  for (const auto& v : r.violations) {
    std::cout << v.reason << " at '" << (v.path.empty() ? "." : v.path) << "': " << v.detail << "\n";
  }
}

struct Common {
  std::string system = "lgt";
  bool compositional = false;
  bool json = false;
};

void add_system(CLI::App* cmd, Common& c) {
  cmd->add_option("--system", c.system, "lgt, qg, lptn or lptn_comp")->capture_default_str();
  cmd->add_flag("--compositional", c.compositional, "add the comp rule to lptn");
  cmd->add_flag("--json", c.json, "structured output");
}

int run_check(const std::string& file, const Common& c) {
  Derivation d = load_proof(file);
  ValidationReport r = check(d, pick_system(c.system, c.compositional));
  if (c.json) {
    std::cout << report_json(r) << "\n";
  } else {
    std::cout << (r.valid() ? "VALID" : "INVALID") << "\n";
    print_violations(r);
  }
  return r.valid() ? kOk : kFail;
}

int run_measures(const std::string& file, const Common& c) {
  Derivation d = load_proof(file);
  ValidationReport r = check(d, pick_system(c.system, c.compositional));
  if (!r.valid()) {
    std::cout << "INVALID\n";
    print_violations(r);
    return kFail;
  }
  Measures m = compute_measures(d);
  if (c.json) {
    std::cout << "{\"measures\": " << measures_json(m, -1) << ", \"tree\": " << derivation_json(d, -1)
              << "}\n";
    return kOk;
  }
  std::cout << "n=" << m.length << " m=" << m.cut_rank << " k=" << m.proof_tau << "\n";
  std::cout << derivation_tree(d);
  return kOk;
}

int run_elim(const std::string& file, const std::string& out, const Common& c) {
  Derivation d = load_proof(file);
  TransformOptions o;
  o.system = pick_system(c.system, c.compositional);
  o.enforce = false;
  TransformResult r = eliminate_cuts(d, o);
  std::string script = print_script(r.output());
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << script;
  }
  if (c.json) {
    std::cout << "{\"certificate\": " << certificate_json(r.certificate, -1);
    if (out.empty()) std::cout << ", \"proof\": " << nlohmann::json(script).dump();
    std::cout << "}\n";
  } else {
    if (out.empty()) std::cout << script;
    std::cout << "# certificate\n" << r.certificate.summary();
  }
  return r.certificate.ok() ? kOk : kFail;
}


PlainSequent parse_goal(const std::string& text) {
  try {
    return parse_sequent(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw UsageError(std::string("sequent: ") + e.what());
    throw;
  }
}

int run_search(const std::string& sequent, const SearchBudget& b, const Common& c) {
  PlainSequent goal = parse_goal(sequent);
  SearchResult r = search_cut_free(goal, b, pick_system(c.system, c.compositional));
  if (c.json) {
    std::cout << search_json(r) << "\n";
  } else if (r.found()) {
    std::cout << "FOUND\n" << print_script(*r.proof);
  } else {
    std::cout << "EXHAUSTED after " << r.goals << " goals\n";
    for (const auto& l : r.frontier) std::cout << "  " << l.reason << ": " << l.sequent << "\n";
  }
  return r.found() ? kOk : kFail;
}

int run_fixpoint(const std::string& seed, std::size_t bound, std::size_t max_size, bool json) {
  std::vector<Formula> seeds;
  try {
    seeds = parse_sentence_file(slurp(seed));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw UsageError(seed + ":" + e.what());
    throw;
  }
  SentenceUniverse u = build_universe(seeds, bound, max_size);
  FixedPoint fp = least_fixed_point(u);
  if (json) {
    std::cout << fixed_point_json(fp, u) << "\n";
  } else {
    std::cout << format_fixed_point(fp, u);
  }
  return kOk;
}

int run_liar(const SearchBudget& b, bool json) {
  const Term v = Term::variable("v");
  Diagonal liar = diagonalize(Formula::negation(Formula::truth(v)));
  const Formula& lambda = liar.sentence;
  SearchResult right = search_cut_free({{}, {lambda}}, b, SystemId::kLGT);
  SearchResult left = search_cut_free({{lambda}, {}}, b, SystemId::kLGT);
  SentenceUniverse u = build_universe({lambda}, 0);
  FixedPoint fp = least_fixed_point(u);
  const bool in = fp.holds(lambda);
  const bool neg_in = fp.holds(Formula::negation(lambda));
  const bool named = eval_term(liar.name) == encode(lambda).value;
  const bool ok = named && !right.found() && !left.found() && !in && !neg_in;
  if (json) {
    nlohmann::json j = {{"sentence", print(lambda)},
                        {"nameEvaluatesToCode", named},
                        {"searchRight", right.found() ? "FOUND" : "EXHAUSTED"},
                        {"searchLeft", left.found() ? "FOUND" : "EXHAUSTED"},
                        {"universe", u.size()},
                        {"lambdaInFixedPoint", in},
                        {"negLambdaInFixedPoint", neg_in},
                        {"ungrounded", !in && !neg_in}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lambda: " << print(lambda) << "\n"
              << "name evaluates to #lambda: " << (named ? "yes" : "no") << "\n"
              << "search => lambda: " << (right.found() ? "FOUND" : "EXHAUSTED") << "\n"
              << "search lambda =>: " << (left.found() ? "FOUND" : "EXHAUSTED") << "\n"
              << "universe: " << u.size() << " sentences\n"
              << "lambda in fixed point: " << (in ? "yes" : "no") << "\n"
              << "not lambda in fixed point: " << (neg_in ? "yes" : "no") << "\n"
              << (ok ? "lambda is ungrounded and underivable within budget\n"
                     : "unexpected outcome\n");
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gtcut: proof kernel, cut elimination and fixed points for type-free truth"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string out;
  std::string sequent;
  std::string seed;
  SearchBudget budget;
  std::size_t term_bound = 3;
  std::size_t max_size = 100000;

  auto* check_cmd = app.add_subcommand("check", "validate a proof script");
  check_cmd->add_option("file", file, "proof script")->required();
  add_system(check_cmd, common);

  auto* measures_cmd = app.add_subcommand("measures", "length, cut rank and T-complexities");
  measures_cmd->add_option("file", file, "proof script")->required();
  add_system(measures_cmd, common);

  auto* elim_cmd = app.add_subcommand("elim", "eliminate cuts and print a certificate");
  elim_cmd->add_option("file", file, "proof script")->required();
  elim_cmd->add_option("--out", out, "write the cut-free script here");
  add_system(elim_cmd, common);

  auto* search_cmd = app.add_subcommand("search", "bounded cut-free proof search");
  search_cmd->add_option("sequent", sequent, "sequent text, e.g. \"=> (= 0 0)\"")->required();
  search_cmd->add_option("--depth", budget.max_depth, "rule applications per branch")->capture_default_str();
  search_cmd->add_option("--terms", budget.max_term_index, "largest numeral instance")->capture_default_str();
  search_cmd->add_option("--tau", budget.max_tau_unfold, "truth-rule applications per branch")
      ->capture_default_str();
  add_system(search_cmd, common);

  auto* fix_cmd = app.add_subcommand("fixpoint", "least Kripke fixed point over a seeded universe");
  fix_cmd->add_option("--seed", seed, "sentence file, one formula per line")->required();
  fix_cmd->add_option("--term-bound", term_bound, "numeral instances of quantifiers")->capture_default_str();
  fix_cmd->add_option("--max-size", max_size, "universe size cap")->capture_default_str();
  fix_cmd->add_flag("--json", common.json, "structured output");

  auto* liar_cmd = app.add_subcommand("liar", "build the liar, search both directions, run the fixed point");
  liar_cmd->add_option("--depth", budget.max_depth)->capture_default_str();
  liar_cmd->add_option("--tau", budget.max_tau_unfold)->capture_default_str();
  liar_cmd->add_flag("--json", common.json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check_cmd) return run_check(file, common);
    if (*measures_cmd) return run_measures(file, common);
    if (*elim_cmd) return run_elim(file, out, common);
    if (*search_cmd) return run_search(sequent, budget, common);
    if (*fix_cmd) return run_fixpoint(seed, term_bound, max_size, common.json);
    if (*liar_cmd) return run_liar(budget, common.json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kParse ? kUsage : kFail;
  }
  return kUsage;
}
