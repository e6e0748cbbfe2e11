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

#include "gtcut/search.hpp"

#include <algorithm>
#include <set>

#include "gtcut/coding.hpp"
#include "gtcut/text.hpp"

namespace gtcut {
namespace {

constexpr std::size_t kFrontierCap = 32;

std::string key_of(const Sequent& s) {
  std::set<std::string> a, b;
  for (const auto& o : s.ante) a.insert(print(o.formula));
  for (const auto& o : s.succ) b.insert(print(o.formula));
  std::string k;
  for (const auto& x : a) k += x + ",";
  k += "=>";
  for (const auto& x : b) k += x + ",";
  return k;
}

void closed_subterms(const Term& t, std::vector<Term>& out) {
  if (t.is_closed() && t.is_arithmetic() &&
      std::find(out.begin(), out.end(), t) == out.end()) {
    out.push_back(t);
  }
  for (const auto& c : t.children()) closed_subterms(c, out);
}

void closed_subterms(const Formula& f, std::vector<Term>& out) {
  switch (f.kind()) {
    case FormulaKind::kEqual:
      closed_subterms(f.lhs(), out);
      closed_subterms(f.rhs(), out);
      return;
    case FormulaKind::kNot:
      closed_subterms(f.operand(), out);
      return;
    case FormulaKind::kAnd:
      closed_subterms(f.left(), out);
      closed_subterms(f.right(), out);
      return;
    case FormulaKind::kForall:
      closed_subterms(f.body(), out);
      return;
    default:
      return;
  }
}

std::optional<Formula> named(const Term& t) {
  if (!t.is_numeral()) return std::nullopt;
  try {
    Formula f = decode_formula(t.value());
    if (f.is_sentence()) return f;
  } catch (const Error&) {
  }
  return std::nullopt;
}

struct Expansion {
  Rule rule;
  OccId principal;
  // Per premise: formulas added as actives.
  std::vector<std::vector<NewFormula>> actives;
  std::vector<Term> params;
  bool keeps_copy = false;  // (forall l)
  bool truth = false;
};

class Engine {
 public:
  Engine(SystemId system, const SearchBudget& budget) : system_(system), budget_(budget) {}

  std::optional<Derivation> run(const PlainSequent& goal) {
    for (const auto& f : goal.ante) collect_variables(f, used_);
    for (const auto& f : goal.succ) collect_variables(f, used_);
    Sequent s = make_sequent(goal, ids_);
    return prove(s, budget_.max_depth, budget_.max_tau_unfold);
  }

  std::vector<FrontierLeaf> frontier;
  std::size_t goals = 0;

 private:
  void leaf(const Sequent& s, std::string reason) {
    if (frontier.size() < kFrontierCap) frontier.push_back({print(s), std::move(reason)});
  }

  bool arithmetic() const { return is_arithmetic_system(system_); }

  std::optional<Derivation> axiom(const Sequent& s) {
    if (system_ == SystemId::kLGT) {
      for (const auto& o : s.succ) {
        if (o.formula.kind() == FormulaKind::kTop) return make_axiom(Rule::kTopAxiom, s, {o.id});
      }
      for (const auto& o : s.ante) {
        if (o.formula.kind() == FormulaKind::kBottom) return make_axiom(Rule::kBotAxiom, s, {o.id});
      }
    }
    for (const auto& a : s.ante) {
      if (!a.formula.is_atomic() || a.formula.contains_truth()) continue;
      for (const auto& b : s.succ) {
        if (a.formula == b.formula) return make_axiom(Rule::kRefMinus, s, {a.id, b.id});
      }
    }
    if (arithmetic()) {
      for (const auto& o : s.ante) {
        const Formula& f = o.formula;
        if (f.kind() == FormulaKind::kEqual && predecessor(f.lhs()) && f.rhs().is_numeral() &&
            f.rhs().value() == 0) {
          return make_axiom(Rule::kQg1, s, {o.id});
        }
      }
      if (auto d = arithmetic_closure(s, ids_)) return d;
    }
    return std::nullopt;
  }

  // Invertible expansions, non-branching ones first.
  std::optional<Expansion> invertible(const Sequent& s, std::size_t tau) {
    std::optional<Expansion> branching;
    auto consider = [&](const Occurrence& o, Side side) -> std::optional<Expansion> {
      const Formula& f = o.formula;
      const Side L = Side::kAntecedent;
      const Side R = Side::kSuccedent;
      switch (f.kind()) {
        case FormulaKind::kNot:
          return Expansion{side == L ? Rule::kNegLeft : Rule::kNegRight, o.id,
                           {{{side == L ? R : L, f.operand()}}}, {}, false, false};
        case FormulaKind::kAnd:
          if (side == L) {
            return Expansion{Rule::kAndLeft, o.id, {{{L, f.left()}, {L, f.right()}}}, {}, false, false};
          }
          if (!branching) {
            branching = Expansion{Rule::kAndRight, o.id, {{{R, f.left()}}, {{R, f.right()}}}, {}, false, false};
          }
          return std::nullopt;
        case FormulaKind::kForall:
          if (side == R) {
            std::string y = fresh_variable(used_, "y");
            used_.insert(y);
            Term yt = Term::variable(y);
            return Expansion{Rule::kAllRight, o.id, {{{R, substitute(f.body(), f.variable(), yt)}}},
                             {yt}, false, false};
          }
          return std::nullopt;
        case FormulaKind::kTruth: {
          if (tau == 0 || !rule_in_system(Rule::kTruthLeft, system_)) return std::nullopt;
          if (auto inner = named(f.name())) {
            return Expansion{side == L ? Rule::kTruthLeft : Rule::kTruthRight, o.id,
                             {{{side, *inner}}}, {}, false, true};
          }
          const Term& n = f.name();
          if (side == R && system_ == SystemId::kLPTNComp && n.kind() == TermKind::kFunction &&
              n.symbol() == FunctionSymbol::kAndDot && !branching) {
            auto l = named(n.children()[0]);
            auto m = named(n.children()[1]);
            if (l && m) branching = Expansion{Rule::kCompAnd, o.id, {{{R, *l}}, {{R, *m}}}, {}, false, true};
          }
          return std::nullopt;
        }
        default:
          return std::nullopt;
      }
    };
    for (const auto& o : s.ante) {
      if (auto e = consider(o, Side::kAntecedent)) return e;
    }
    for (const auto& o : s.succ) {
      if (auto e = consider(o, Side::kSuccedent)) return e;
    }
    return branching;
  }

  std::optional<Derivation> apply(const Sequent& s, const Expansion& e, std::size_t depth,
                                  std::size_t tau) {
    const std::size_t n = e.actives.size();
    std::vector<Sequent> premises(n);
    std::vector<std::vector<OccId>> active(n);
    std::map<OccId, std::vector<OccId>> lineage;
    const Occurrence* principal = s.lookup(e.principal);
    for (Side side : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : s.side(side)) {
        if (o.id == e.principal) continue;
        for (std::size_t i = 0; i < n; ++i) {
          OccId id = ids_.fresh();
          premises[i].side(side).push_back({o.formula, id});
          lineage[o.id].push_back(id);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e.keeps_copy) {
        OccId id = ids_.fresh();
        premises[i].ante.push_back({principal->formula, id});
        active[i].push_back(id);
      }
      for (const auto& a : e.actives[i]) {
        OccId id = ids_.fresh();
        premises[i].side(a.side).push_back({a.formula, id});
        active[i].push_back(id);
      }
    }
    std::vector<Derivation> proofs;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = prove(premises[i], depth - 1, e.truth ? tau - 1 : tau);
      if (!p) return std::nullopt;
      proofs.push_back(*p);
    }
    DerivationNode node;
    node.rule = e.rule;
    node.conclusion = s;
    node.premises = std::move(proofs);
    node.principal = {e.principal};
    node.active = std::move(active);
    node.params = e.params;
    node.lineage = std::move(lineage);
    return make_node(std::move(node));
  }

  std::vector<Term> instances(const Sequent& s) {
    std::vector<Term> out;
    for (std::size_t i = 0; i <= budget_.max_term_index; ++i) out.push_back(Term::numeral(i));
    for (const auto& o : s.ante) closed_subterms(o.formula, out);
    for (const auto& o : s.succ) closed_subterms(o.formula, out);
    VariableSet fv;
    for (const auto& o : s.ante) {
      auto v = free_variables(o.formula);
      fv.insert(v.begin(), v.end());
    }
    for (const auto& o : s.succ) {
      auto v = free_variables(o.formula);
      fv.insert(v.begin(), v.end());
    }
    for (const auto& v : fv) out.push_back(Term::variable(v));
    return out;
  }

  std::optional<Derivation> prove(const Sequent& s, std::size_t depth, std::size_t tau) {
    if (++goals > budget_.max_goals) {
      leaf(s, "goal cap");
      return std::nullopt;
    }
    std::string key = key_of(s);
    if (path_.contains(key)) {
      leaf(s, "loop");
      return std::nullopt;
    }
    if (auto d = axiom(s)) return d;
    if (depth == 0) {
      leaf(s, "depth");
      return std::nullopt;
    }
    path_.insert(key);
    std::optional<Derivation> result;
    if (auto e = invertible(s, tau)) {
      result = apply(s, *e, depth, tau);
    } else {
      result = instantiate(s, depth, tau);
    }
    path_.erase(key);
    return result;
  }

  std::optional<Derivation> instantiate(const Sequent& s, std::size_t depth, std::size_t tau) {
    std::set<Formula, FormulaLess> present;
    for (const auto& o : s.ante) present.insert(o.formula);
    bool any = false;
    for (const auto& o : s.ante) {
      if (o.formula.kind() != FormulaKind::kForall) continue;
      for (const Term& t : instances(s)) {
        Formula inst = Formula::top();
        try {
          inst = substitute(o.formula.body(), o.formula.variable(), t);
        } catch (const Error&) {
          continue;
        }
        if (present.contains(inst)) continue;
        any = true;
        Expansion e{Rule::kAllLeft, o.id, {{{Side::kAntecedent, inst}}}, {t}, true, false};
        if (auto d = apply(s, e, depth, tau)) return d;
      }
    }
    if (!any) leaf(s, "no rule applies");
    return std::nullopt;
  }

  SystemId system_;
  SearchBudget budget_;
  IdAllocator ids_{1};
  VariableSet used_;
  std::set<std::string> path_;
};

}  // namespace

SearchResult search_cut_free(const PlainSequent& goal, const SearchBudget& budget, SystemId system) {
  SearchResult r;
  for (const auto* side : {&goal.ante, &goal.succ}) {
    for (const auto& f : *side) {
      if (!in_language(f, system)) {
        r.frontier.push_back({print(goal), "outside the language of " + std::string(system_name(system))});
        return r;
      }
    }
  }
  Engine engine(system, budget);
  r.proof = engine.run(goal);
  r.goals = engine.goals;
  if (!r.proof) r.frontier = std::move(engine.frontier);
  return r;
}

std::size_t ConservativityReport::asymmetric() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.in_lptn != e.in_qg;
  }));
}

ConservativityReport check_conservativity(const std::vector<PlainSequent>& corpus,
                                          const SearchBudget& budget) {
  ConservativityReport report;
  for (const auto& s : corpus) {
    for (const auto& f : s.ante) {
      if (f.contains_truth()) throw Error(ErrorCode::kInvalidDerivation, "sequent mentions T: " + print(s));
    }
    for (const auto& f : s.succ) {
      if (f.contains_truth()) throw Error(ErrorCode::kInvalidDerivation, "sequent mentions T: " + print(s));
    }
    ConservativityEntry e;
    e.sequent = s;
    e.in_lptn = search_cut_free(s, budget, SystemId::kLPTN).found();
    e.in_qg = search_cut_free(s, budget, SystemId::kQg).found();
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace gtcut
