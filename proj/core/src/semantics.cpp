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

#include "gtcut/semantics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gtcut/coding.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/measures.hpp"
#include "gtcut/text.hpp"

namespace gtcut {
namespace {

Natural code_of(const Formula& f) { return encode(f).value; }

std::optional<Natural> value(const Term& t) {
  try {
    return eval_term(t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Formula> sentence_named(const Term& t) {
  auto v = value(t);
  if (!v) return std::nullopt;
  try {
    Formula f = decode_formula(*v);
    if (f.is_sentence()) return f;
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::vector<Formula> instances(const Formula& all, std::size_t bound, bool negate) {
  std::vector<Formula> out;
  for (std::size_t n = 0; n <= bound; ++n) {
    Formula i = substitute(all.body(), all.variable(), Term::numeral(n));
    out.push_back(negate ? Formula::negation(i) : i);
  }
  return out;
}

// Sentences the clause of `f` inspects.
std::vector<Formula> dependencies(const Formula& f, std::size_t bound) {
  switch (f.kind()) {
    case FormulaKind::kTruth:
      if (auto s = sentence_named(f.name())) return {*s};
      return {};
    case FormulaKind::kAnd:
      return {f.left(), f.right()};
    case FormulaKind::kForall:
      return instances(f, bound, false);
    case FormulaKind::kNot: {
      const Formula& g = f.operand();
      switch (g.kind()) {
        case FormulaKind::kTruth:
          if (auto s = sentence_named(g.name())) return {Formula::negation(*s)};
          return {};
        case FormulaKind::kNot:
          return {g.operand()};
        case FormulaKind::kAnd:
          return {Formula::negation(g.left()), Formula::negation(g.right())};
        case FormulaKind::kForall:
          return instances(g, bound, true);
        default:
          return {};
      }
    }
    default:
      return {};
  }
}

bool in(const CodeSet& s, const Formula& f) { return s.contains(code_of(f)); }

bool clause(const Formula& f, const CodeSet& x, std::size_t bound) {
  switch (f.kind()) {
    case FormulaKind::kEqual: {
      auto a = value(f.lhs());
      auto b = value(f.rhs());
      return a && b && *a == *b;
    }
    case FormulaKind::kTruth: {
      auto v = value(f.name());
      return v && sentence_named(f.name()) && x.contains(*v);
    }
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kBottom:
      return false;
    case FormulaKind::kAnd:
      return in(x, f.left()) && in(x, f.right());
    case FormulaKind::kForall: {
      for (const auto& i : instances(f, bound, false)) {
        if (!in(x, i)) return false;
      }
      return true;
    }
    case FormulaKind::kNot:
      break;
  }
  const Formula& g = f.operand();
  switch (g.kind()) {
    case FormulaKind::kEqual: {
      auto a = value(g.lhs());
      auto b = value(g.rhs());
      return a && b && *a != *b;
    }
    case FormulaKind::kTruth: {
      auto s = sentence_named(g.name());
      return s && in(x, Formula::negation(*s));
    }
    case FormulaKind::kTop:
      return false;
    case FormulaKind::kBottom:
      return true;
    case FormulaKind::kNot:
      return in(x, g.operand());
    case FormulaKind::kAnd:
      return in(x, Formula::negation(g.left())) || in(x, Formula::negation(g.right()));
    case FormulaKind::kForall: {
      for (const auto& i : instances(g, bound, true)) {
        if (in(x, i)) return true;
      }
      return false;
    }
  }
  return false;
}

bool quantified_dependency(const Formula& f, const SentenceUniverse& u) {
  std::set<Natural> seen;
  std::deque<Formula> todo{f};
  while (!todo.empty()) {
    Formula g = todo.front();
    todo.pop_front();
    if (!seen.insert(code_of(g)).second) continue;
    Formula h = g.kind() == FormulaKind::kNot ? g.operand() : g;
    if (h.kind() == FormulaKind::kForall) return true;
    for (const auto& d : dependencies(g, u.term_bound)) todo.push_back(d);
  }
  return false;
}

}  // namespace

bool SentenceUniverse::contains(const Formula& f) const { return contains(code_of(f)); }

SentenceUniverse build_universe(const std::vector<Formula>& seeds, std::size_t term_bound,
                                std::size_t max_size) {
  SentenceUniverse u;
  u.seeds = seeds;
  u.term_bound = term_bound;
  std::deque<Formula> todo;
  for (const auto& s : seeds) {
    if (!s.is_sentence()) {
      throw Error(ErrorCode::kWrongFreeVariables, print(s) + " is not a sentence");
    }
    todo.push_back(s);
  }
  while (!todo.empty()) {
    Formula f = todo.front();
    todo.pop_front();
    Natural c = code_of(f);
    if (u.members.contains(c)) continue;
    if (u.members.size() >= max_size) {
      throw Error(ErrorCode::kUniverseTooLarge,
                  "closure exceeds " + std::to_string(max_size) + " sentences");
    }
    u.members.emplace(c, f);
    Formula h = f.kind() == FormulaKind::kNot ? f.operand() : f;
    if (h.kind() == FormulaKind::kForall && free_variables(h.body()).contains(h.variable())) {
      u.exact = false;
    }
    for (const auto& d : dependencies(f, term_bound)) todo.push_back(d);
  }
  return u;
}

CodeSet kripke_step(const CodeSet& s, const SentenceUniverse& u) {
  CodeSet out;
  for (const auto& [c, f] : u.members) {
    if (clause(f, s, u.term_bound)) out.insert(c);
  }
  return out;
}

bool FixedPoint::holds(const Formula& f) const { return members.contains(code_of(f)); }

std::optional<std::size_t> FixedPoint::norm(const Formula& f) const {
  auto it = norms.find(code_of(f));
  if (it == norms.end()) return std::nullopt;
  return it->second;
}

FixedPoint least_fixed_point(const SentenceUniverse& u) {
  FixedPoint fp;
  CodeSet cur;
  for (std::size_t i = 0;; ++i) {
    CodeSet next = kripke_step(cur, u);
    // Cumulative stages: K is monotone, so this only matters for safety.
    next.insert(cur.begin(), cur.end());
    for (const auto& c : next) fp.norms.emplace(c, i);
    if (next == cur) {
      fp.saturation_index = i;
      break;
    }
    fp.stages.push_back(next);
    cur = std::move(next);
  }
  fp.members = cur;
  return fp;
}

SoundnessVerdict check_soundness(const Derivation& d, const FixedPoint& fp,
                                 const SentenceUniverse& u) {
  if (!is_cut_free(d)) throw Error(ErrorCode::kInvalidDerivation, "proof contains a cut");
  ValidationReport r = check(d, SystemId::kLPTNComp);
  if (!r.valid()) {
    throw Error(ErrorCode::kInvalidDerivation, "proof does not validate: " + r.violations.front().reason);
  }
  SoundnessVerdict v;
  v.length = derivation_length(d);
  // A false antecedent formula is witnessed by its negation. When that is
  // missing the universe is extended; stages of old members do not move,
  // since a member only depends on members.
  std::vector<Formula> missing;
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : d.conclusion().side(s)) {
      if (!u.contains(o.formula)) {
        throw Error(ErrorCode::kCoverageGap, print(o.formula) + " is not in the universe");
      }
      Formula neg = Formula::negation(o.formula);
      if (s == Side::kAntecedent && !u.contains(neg)) missing.push_back(neg);
    }
  }
  std::optional<FixedPoint> wider;
  if (!missing.empty()) {
    std::vector<Formula> seeds = u.seeds;
    seeds.insert(seeds.end(), missing.begin(), missing.end());
    wider = least_fixed_point(build_universe(seeds, u.term_bound));
  }
  const FixedPoint& model = wider ? *wider : fp;
  auto consider = [&](const Formula& f, bool ante) {
    Formula g = ante ? Formula::negation(f) : f;
    auto n = model.norm(g);
    if (n && *n <= v.length && (!v.witness || *n < v.norm)) {
      v.holds = true;
      v.in_antecedent = ante;
      v.witness = f;
      v.norm = *n;
    }
  };
  for (const auto& o : d.conclusion().ante) consider(o.formula, true);
  for (const auto& o : d.conclusion().succ) consider(o.formula, false);
  std::ostringstream out;
  if (v.holds) {
    out << (v.in_antecedent ? "antecedent " : "succedent ") << print(*v.witness) << " with norm "
        << v.norm << " <= length " << v.length;
  } else {
    out << "no member of " << print(d.conclusion()) << " is grounded within norm " << v.length;
  }
  v.detail = out.str();
  return v;
}

CompletenessVerdict check_completeness(const Formula& phi, const FixedPoint& fp,
                                       const SentenceUniverse& u, std::size_t slack,
                                       SystemId system) {
  CompletenessVerdict v;
  if (!u.contains(phi)) throw Error(ErrorCode::kCoverageGap, print(phi) + " is not in the universe");
  if (quantified_dependency(phi, u)) {
    v.status = CompletenessStatus::kExcluded;
    return v;
  }
  PlainSequent goal;
  std::optional<std::size_t> n = fp.norm(phi);
  if (n) {
    goal.succ = {phi};
  } else if ((n = fp.norm(Formula::negation(phi)))) {
    goal.ante = {phi};
    v.negative = true;
  } else {
    v.status = CompletenessStatus::kVacuous;
    return v;
  }
  v.norm = *n;
  v.depth = *n + slack;
  SearchBudget b;
  b.max_depth = v.depth;
  b.max_tau_unfold = v.depth;
  b.max_term_index = u.term_bound;
  SearchResult r = search_cut_free(goal, b, system);
  v.status = r.found() ? CompletenessStatus::kFound : CompletenessStatus::kBudgetFailure;
  v.proof = r.proof;
  return v;
}

std::string_view completeness_status_name(CompletenessStatus s) {
  switch (s) {
    case CompletenessStatus::kFound: return "FOUND";
    case CompletenessStatus::kVacuous: return "VACUOUS";
    case CompletenessStatus::kExcluded: return "EXCLUDED";
    case CompletenessStatus::kBudgetFailure: return "BUDGET_FAILURE";
  }
  return "?";
}

std::string format_fixed_point(const FixedPoint& fp, const SentenceUniverse& u) {
  std::ostringstream out;
  out << "# universe " << u.size() << " sentences, term bound " << u.term_bound
      << (u.exact ? "" : " (approximation)") << "\n";
  out << "# saturated at stage " << fp.saturation_index << " with " << fp.members.size()
      << " members\n";
  for (std::size_t i = 0; i < fp.stages.size(); ++i) {
    std::size_t before = i == 0 ? 0 : fp.stages[i - 1].size();
    out << "# stage " << i << ": +" << fp.stages[i].size() - before << " (" << fp.stages[i].size()
        << ")\n";
  }
  out << "norm\tsentence\n";
  std::vector<std::pair<std::size_t, std::string>> rows;
  std::vector<std::string> absent;
  for (const auto& [c, f] : u.members) {
    auto it = fp.norms.find(c);
    if (it == fp.norms.end()) {
      absent.push_back(print(f));
    } else {
      rows.emplace_back(it->second, print(f));
    }
  }
  std::sort(rows.begin(), rows.end());
  std::sort(absent.begin(), absent.end());
  for (const auto& [n, s] : rows) out << n << "\t" << s << "\n";
  for (const auto& s : absent) out << "-\t" << s << "\n";
  return out.str();
}

}  // namespace gtcut
