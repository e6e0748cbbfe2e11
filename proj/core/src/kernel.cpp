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

#include "gtcut/kernel.hpp"

#include <algorithm>
#include <set>

#include "gtcut/coding.hpp"
#include "gtcut/text.hpp"

namespace gtcut {

std::string_view system_name(SystemId system) {
  switch (system) {
    case SystemId::kLGT: return "lgt";
    case SystemId::kQg: return "qg";
    case SystemId::kLPTN: return "lptn";
    case SystemId::kLPTNComp: return "lptn_comp";
  }
  return "?";
}

std::optional<SystemId> system_from_name(std::string_view name) {
  for (SystemId s : {SystemId::kLGT, SystemId::kQg, SystemId::kLPTN, SystemId::kLPTNComp}) {
    if (system_name(s) == name) return s;
  }
  return std::nullopt;
}

bool is_arithmetic_system(SystemId system) { return system != SystemId::kLGT; }

bool rule_in_system(Rule rule, SystemId system) {
  switch (rule) {
    case Rule::kRefMinus:
    case Rule::kCut:
    case Rule::kNegLeft:
    case Rule::kNegRight:
    case Rule::kAndLeft:
    case Rule::kAndRight:
    case Rule::kAllLeft:
    case Rule::kAllRight:
      return true;
    case Rule::kTopAxiom:
    case Rule::kBotAxiom:
      return system == SystemId::kLGT;
    case Rule::kTruthLeft:
    case Rule::kTruthRight:
      return system != SystemId::kQg;
    case Rule::kCompAnd:
      return system == SystemId::kLPTNComp;
    default:
      return is_arithmetic_system(system);
  }
}

bool ValidationReport::has(std::string_view reason_code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.reason == reason_code; });
}

std::optional<Term> predecessor(const Term& t) {
  if (t.kind() == TermKind::kSuccessor) return t.children()[0];
  if (t.is_numeral() && t.value() > 0) return Term::numeral(t.value() - 1);
  return std::nullopt;
}

namespace {

bool is_zero(const Term& t) { return t.is_numeral() && t.value() == 0; }

// The sentence named by a numeral, if any.
std::optional<Formula> named_sentence(const Term& t) {
  if (!t.is_numeral()) return std::nullopt;
  try {
    Formula f = decode_formula(t.value());
    if (!f.is_sentence()) return std::nullopt;
    return f;
  } catch (const Error&) {
    return std::nullopt;
  }
}

class Checker {
 public:
  explicit Checker(SystemId system) : system_(system) {}

  ValidationReport run(const Derivation& d) {
    if (!ids_unique(d)) add("", reason::kDuplicateOccId, "an occurrence id is used twice");
    node(d, "");
    if (is_arithmetic_system(system_)) {
      for (const auto& v : free_) {
        if (bound_.contains(v)) {
          add("", reason::kPureVariable, "variable " + v + " occurs both free and bound");
        }
      }
    }
    return std::move(report_);
  }

 private:
  void add(const std::string& path, std::string_view code, std::string detail) {
    report_.violations.push_back({path, std::string(code), std::move(detail)});
  }

  void language(const std::string& path, const Formula& f) {
    VariableSet fv = free_variables(f);
    free_.insert(fv.begin(), fv.end());
    VariableSet bv = bound_variables(f);
    bound_.insert(bv.begin(), bv.end());
    if (system_ == SystemId::kQg && f.contains_truth()) {
      add(path, reason::kTruthInBaseSystem, print(f));
    }
    if (!in_language(f, system_)) {
      add(path, reason::kNonArithmeticTerm, print(f));
    }
  }


  const Occurrence* principal_at(const Derivation& d, std::size_t i, Side side) {
    if (i >= d.principal().size()) return nullptr;
    auto where = d.conclusion().find(d.principal()[i]);
    if (!where || where->first != side) return nullptr;
    return &d.conclusion().side(side)[where->second];
  }

  const Occurrence* active_at(const Derivation& d, std::size_t prem, std::size_t i, Side side) {
    if (prem >= d.active().size() || i >= d.active()[prem].size()) return nullptr;
    const Sequent& s = d.premises()[prem].conclusion();
    auto where = s.find(d.active()[prem][i]);
    if (!where || where->first != side) return nullptr;
    return &s.side(side)[where->second];
  }

  bool shape(const std::string& path, const Derivation& d, std::size_t principals,
             std::vector<std::size_t> actives) {
    bool ok = true;
    if (d.principal().size() != principals) {
      add(path, reason::kBadPrincipal,
          "expected " + std::to_string(principals) + " principal occurrence(s)");
      ok = false;
    }
    if (d.active().size() != actives.size()) {
      add(path, reason::kBadActive, "active lists do not match premises");
      return false;
    }
    for (std::size_t i = 0; i < actives.size(); ++i) {
      if (d.active()[i].size() != actives[i]) {
        add(path, reason::kBadActive,
            "premise " + std::to_string(i) + " expects " + std::to_string(actives[i]) +
                " active occurrence(s)");
        ok = false;
      }
    }
    return ok;
  }

  void structure(const std::string& path, const Derivation& d) {
    const auto& prem = d.premises();
    std::set<OccId> principal(d.principal().begin(), d.principal().end());
    if (principal.size() != d.principal().size()) {
      add(path, reason::kBadPrincipal, "principal occurrence listed twice");
    }
    for (OccId p : principal) {
      if (!d.conclusion().lookup(p)) {
        add(path, reason::kBadPrincipal, "principal " + std::to_string(p) + " not in conclusion");
      }
    }
    std::vector<std::set<OccId>> used(prem.size());
    for (std::size_t i = 0; i < d.active().size() && i < prem.size(); ++i) {
      for (OccId a : d.active()[i]) {
        if (!prem[i].conclusion().lookup(a)) {
          add(path, reason::kBadActive, "active " + std::to_string(a) + " not in premise");
        } else if (!used[i].insert(a).second) {
          add(path, reason::kBadActive, "active " + std::to_string(a) + " listed twice");
        }
      }
    }
    for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : d.conclusion().side(s)) {
        if (principal.contains(o.id)) continue;
        auto it = d.lineage().find(o.id);
        if (it == d.lineage().end() || it->second.size() != prem.size()) {
          add(path, reason::kLineageBroken, "occurrence " + std::to_string(o.id) + " of " +
                                                print(o.formula) + " has no ancestor record");
          continue;
        }
        for (std::size_t i = 0; i < prem.size(); ++i) {
          OccId a = it->second[i];
          auto where = prem[i].conclusion().find(a);
          if (!where || where->first != s ||
              !(prem[i].conclusion().side(s)[where->second].formula == o.formula)) {
            add(path, reason::kLineageBroken,
                "occurrence " + std::to_string(o.id) + " does not descend from " +
                    std::to_string(a));
          } else if (!used[i].insert(a).second) {
            add(path, reason::kLineageBroken,
                "premise occurrence " + std::to_string(a) + " has two descendants");
          }
        }
      }
    }
    for (std::size_t i = 0; i < prem.size(); ++i) {
      for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
        for (const auto& o : prem[i].conclusion().side(s)) {
          if (!used[i].contains(o.id)) {
            add(path, reason::kContextMismatch,
                "premise " + std::to_string(i) + " occurrence of " + print(o.formula) +
                    " is dropped");
          }
        }
      }
    }
  }

  void node(const Derivation& d, const std::string& path) {
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      node(d.premises()[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i));
    }
    for (const auto& o : d.conclusion().ante) language(path, o.formula);
    for (const auto& o : d.conclusion().succ) language(path, o.formula);
    for (const auto& p : d.params()) {
      VariableSet fv = free_variables(p);
      free_.insert(fv.begin(), fv.end());
    }
    if (!rule_in_system(d.rule(), system_)) {
      add(path, reason::kRuleNotInSystem,
          std::string(rule_name(d.rule())) + " is not a rule of " +
              std::string(system_name(system_)));
    }
    if (d.premises().size() != premise_count(d.rule())) {
      add(path, reason::kPremiseCount,
          std::string(rule_name(d.rule())) + " needs " +
              std::to_string(premise_count(d.rule())) + " premise(s)");
      return;
    }
    structure(path, d);
    rule(d, path);
  }

  void rule(const Derivation& d, const std::string& path) {
    const Side L = Side::kAntecedent;
    const Side R = Side::kSuccedent;
    switch (d.rule()) {
      case Rule::kRefMinus: {
        if (!shape(path, d, 2, {})) return;
        const Occurrence* a = principal_at(d, 0, L);
        const Occurrence* b = principal_at(d, 1, R);
        if (!a || !b) {
          a = principal_at(d, 1, L);
          b = principal_at(d, 0, R);
        }
        if (!a || !b) {
          add(path, reason::kBadPrincipal, "ref needs one principal on each side");
          return;
        }
        if (!(a->formula == b->formula)) {
          add(path, reason::kRefMinusMismatch, print(a->formula) + " vs " + print(b->formula));
          return;
        }
        if (!a->formula.is_atomic()) {
          add(path, reason::kRefMinusNotAtomic, print(a->formula));
        } else if (a->formula.contains_truth()) {
          add(path, reason::kRefMinusTPrincipal, print(a->formula));
        }
        return;
      }
      case Rule::kTopAxiom: {
        if (!shape(path, d, 1, {})) return;
        const Occurrence* p = principal_at(d, 0, R);
        if (!p || p->formula.kind() != FormulaKind::kTop) {
          add(path, reason::kBadPrincipal, "top axiom needs top in the succedent");
        }
        return;
      }
      case Rule::kBotAxiom: {
        if (!shape(path, d, 1, {})) return;
        const Occurrence* p = principal_at(d, 0, L);
        if (!p || p->formula.kind() != FormulaKind::kBottom) {
          add(path, reason::kBadPrincipal, "bot axiom needs bot in the antecedent");
        }
        return;
      }
      case Rule::kQg1: {
        if (!shape(path, d, 1, {})) return;
        const Occurrence* p = principal_at(d, 0, L);
        if (!p || p->formula.kind() != FormulaKind::kEqual || !predecessor(p->formula.lhs()) ||
            !is_zero(p->formula.rhs())) {
          add(path, reason::kGeometricMismatch, "qg1 needs S(t) = 0 in the antecedent");
        }
        return;
      }
      case Rule::kCut: {
        if (!shape(path, d, 0, {1, 1})) return;
        const Occurrence* a = active_at(d, 0, 0, R);
        const Occurrence* b = active_at(d, 1, 0, L);
        if (!a || !b || !(a->formula == b->formula)) {
          add(path, reason::kBadActive, "cut formula must be right in premise 0, left in 1");
        }
        return;
      }
      case Rule::kTruthLeft:
      case Rule::kTruthRight: {
        if (!shape(path, d, 1, {1})) return;
        Side side = d.rule() == Rule::kTruthLeft ? L : R;
        const Occurrence* p = principal_at(d, 0, side);
        const Occurrence* a = active_at(d, 0, 0, side);
        if (!p || p->formula.kind() != FormulaKind::kTruth) {
          add(path, reason::kBadPrincipal, "truth rule needs a T-atom principal");
          return;
        }
        if (!a) {
          add(path, reason::kBadActive, "truth rule active on the wrong side");
          return;
        }
        auto named = named_sentence(p->formula.name());
        if (!named) {
          add(path, reason::kNotASentenceCode, print(p->formula.name()));
        } else if (!(*named == a->formula)) {
          add(path, reason::kNumeralDecodeMismatch,
              print(p->formula) + " names " + print(*named) + ", premise has " +
                  print(a->formula));
        }
        return;
      }
      case Rule::kNegLeft:
      case Rule::kNegRight: {
        if (!shape(path, d, 1, {1})) return;
        bool left = d.rule() == Rule::kNegLeft;
        const Occurrence* p = principal_at(d, 0, left ? L : R);
        const Occurrence* a = active_at(d, 0, 0, left ? R : L);
        if (!p || p->formula.kind() != FormulaKind::kNot) {
          add(path, reason::kBadPrincipal, "negation rule needs a negation principal");
        } else if (!a || !(a->formula == p->formula.operand())) {
          add(path, reason::kBadActive, "negation rule active must be the negated formula");
        }
        return;
      }
      case Rule::kAndLeft: {
        if (!shape(path, d, 1, {2})) return;
        const Occurrence* p = principal_at(d, 0, L);
        const Occurrence* a = active_at(d, 0, 0, L);
        const Occurrence* b = active_at(d, 0, 1, L);
        if (!p || p->formula.kind() != FormulaKind::kAnd) {
          add(path, reason::kBadPrincipal, "andl needs a conjunction in the antecedent");
        } else if (!a || !b || !((a->formula == p->formula.left() && b->formula == p->formula.right()) ||
                                 (b->formula == p->formula.left() && a->formula == p->formula.right()))) {
          add(path, reason::kBadActive, "andl actives must be both conjuncts");
        }
        return;
      }
      case Rule::kAndRight: {
        if (!shape(path, d, 1, {1, 1})) return;
        const Occurrence* p = principal_at(d, 0, R);
        const Occurrence* a = active_at(d, 0, 0, R);
        const Occurrence* b = active_at(d, 1, 0, R);
        if (!p || p->formula.kind() != FormulaKind::kAnd) {
          add(path, reason::kBadPrincipal, "andr needs a conjunction in the succedent");
        } else if (!a || !b || !(a->formula == p->formula.left()) ||
                   !(b->formula == p->formula.right())) {
          add(path, reason::kBadActive, "andr actives must be the left and right conjunct");
        }
        return;
      }
      case Rule::kAllLeft: {
        if (!shape(path, d, 1, {2})) return;
        const Occurrence* p = principal_at(d, 0, L);
        const Occurrence* a = active_at(d, 0, 0, L);
        const Occurrence* b = active_at(d, 0, 1, L);
        if (!p || p->formula.kind() != FormulaKind::kForall) {
          add(path, reason::kBadPrincipal, "alll needs a universal formula in the antecedent");
          return;
        }
        if (!a || !b) {
          add(path, reason::kBadActive, "alll actives must be in the antecedent");
          return;
        }
        if (!(a->formula == p->formula)) std::swap(a, b);
        if (!(a->formula == p->formula)) {
          add(path, reason::kBadActive, "alll must retain the universal formula");
          return;
        }
        const Formula& f = p->formula;
        std::optional<Term> s;
        if (!d.params().empty()) {
          s = d.params()[0];
        } else {
          s = match_instance(f.body(), f.variable(), b->formula, Term::variable(f.variable()));
        }
        bool ok = false;
        if (s) {
          try {
            ok = substitute(f.body(), f.variable(), *s) == b->formula;
          } catch (const Error&) {
            ok = false;
          }
        }
        if (!ok) add(path, reason::kInstanceMismatch, print(b->formula) + " is not an instance of " + print(f));
        return;
      }
      case Rule::kAllRight: {
        if (!shape(path, d, 1, {1})) return;
        const Occurrence* p = principal_at(d, 0, R);
        const Occurrence* a = active_at(d, 0, 0, R);
        if (!p || p->formula.kind() != FormulaKind::kForall) {
          add(path, reason::kBadPrincipal, "allr needs a universal formula in the succedent");
          return;
        }
        if (!a) {
          add(path, reason::kBadActive, "allr active must be in the succedent");
          return;
        }
        const Formula& f = p->formula;
        std::optional<Term> y;
        if (!d.params().empty()) {
          y = d.params()[0];
        } else {
          y = match_instance(f.body(), f.variable(), a->formula, Term::variable(f.variable()));
        }
        if (!y || !y->is_variable()) {
          add(path, reason::kInstanceMismatch, "allr needs a variable instance");
          return;
        }
        bool ok = false;
        try {
          ok = substitute(f.body(), f.variable(), *y) == a->formula;
        } catch (const Error&) {
        }
        if (!ok) {
          add(path, reason::kInstanceMismatch, print(a->formula) + " is not " + print(f) +
                                                   " at " + y->name());
          return;
        }
        for (const auto& o : d.conclusion().ante) {
          if (free_variables(o.formula).contains(y->name())) {
            add(path, reason::kEigenvarClash, y->name() + " is free in " + print(o.formula));
          }
        }
        for (const auto& o : d.conclusion().succ) {
          if (free_variables(o.formula).contains(y->name())) {
            add(path, reason::kEigenvarClash, y->name() + " is free in " + print(o.formula));
          }
        }
        return;
      }
      case Rule::kEq1: {
        if (!shape(path, d, 0, {1})) return;
        const Occurrence* a = active_at(d, 0, 0, L);
        if (!a || a->formula.kind() != FormulaKind::kEqual || !(a->formula.lhs() == a->formula.rhs())) {
          add(path, reason::kGeometricMismatch, "eq1 discharges t = t from the antecedent");
        }
        return;
      }
      case Rule::kEq2: {
        if (!shape(path, d, 0, {1})) return;
        const Occurrence* a = active_at(d, 0, 0, L);
        if (!a || a->formula.kind() != FormulaKind::kEqual) {
          add(path, reason::kGeometricMismatch, "eq2 discharges an identity phi(s)");
          return;
        }
        const auto& ante = d.conclusion().ante;
        for (std::size_t i = 0; i < ante.size(); ++i) {
          const Formula& e = ante[i].formula;
          if (e.kind() != FormulaKind::kEqual) continue;
          for (std::size_t j = 0; j < ante.size(); ++j) {
            if (replaces(ante[j].formula, a->formula, e.rhs(), e.lhs())) return;
          }
        }
        add(path, reason::kGeometricMismatch,
            "eq2 needs s = t and phi(t) beside the discharged " + print(a->formula));
        return;
      }
      case Rule::kQg2: {
        if (!shape(path, d, 0, {1})) return;
        const Occurrence* a = active_at(d, 0, 0, L);
        if (!a || a->formula.kind() != FormulaKind::kEqual) {
          add(path, reason::kGeometricMismatch, "qg2 discharges s = t");
          return;
        }
        Formula succ = Formula::equal(Term::successor(a->formula.lhs()),
                                      Term::successor(a->formula.rhs()));
        for (const auto& o : d.conclusion().ante) {
          if (o.formula == succ) return;
        }
        add(path, reason::kGeometricMismatch, "qg2 needs " + print(succ) + " in the antecedent");
        return;
      }
      case Rule::kQg3: {
        if (!shape(path, d, 0, {1, 1})) return;
        const Occurrence* a = active_at(d, 0, 0, L);
        const Occurrence* b = active_at(d, 1, 0, L);
        if (!a || !b || a->formula.kind() != FormulaKind::kEqual ||
            b->formula.kind() != FormulaKind::kEqual || !is_zero(a->formula.rhs())) {
          add(path, reason::kGeometricMismatch, "qg3 discharges t = 0 and y = S(t)");
          return;
        }
        const Term& t = a->formula.lhs();
        const Term& y = b->formula.lhs();
        if (!y.is_variable() || !(b->formula.rhs() == Term::successor(t))) {
          add(path, reason::kGeometricMismatch, "qg3 right premise must discharge y = S(t)");
          return;
        }
        if (!d.params().empty() && !(d.params().back() == y)) {
          add(path, reason::kGeometricMismatch, "qg3 eigenvariable parameter differs");
        }
        bool clash = occurs(y.name(), t);
        for (const auto& o : d.conclusion().ante) clash = clash || free_variables(o.formula).contains(y.name());
        for (const auto& o : d.conclusion().succ) clash = clash || free_variables(o.formula).contains(y.name());
        if (clash) add(path, reason::kEigenvarClash, y.name() + " occurs in the conclusion or in t");
        if (!qg3_eigen_.insert(y.name()).second) {
          add(path, reason::kEigenvarReused, y.name() + " is the eigenvariable of another qg3");
        }
        return;
      }
      case Rule::kQg4:
      case Rule::kQg5:
      case Rule::kQg6:
      case Rule::kQg7: {
        if (!shape(path, d, 0, {1})) return;
        const Occurrence* a = active_at(d, 0, 0, L);
        if (!a || a->formula.kind() != FormulaKind::kEqual || !geometric_axiom(d.rule(), a->formula)) {
          add(path, reason::kGeometricMismatch,
              std::string(rule_name(d.rule())) + " discharges the wrong identity");
        }
        return;
      }
      case Rule::kCompAnd: {
        if (!shape(path, d, 1, {1, 1})) return;
        const Occurrence* p = principal_at(d, 0, R);
        const Occurrence* a = active_at(d, 0, 0, R);
        const Occurrence* b = active_at(d, 1, 0, R);
        if (!p || p->formula.kind() != FormulaKind::kTruth ||
            p->formula.name().kind() != TermKind::kFunction ||
            p->formula.name().symbol() != FunctionSymbol::kAndDot) {
          add(path, reason::kBadPrincipal, "comp needs T(anddot l m) in the succedent");
          return;
        }
        auto l = named_sentence(p->formula.name().children()[0]);
        auto m = named_sentence(p->formula.name().children()[1]);
        if (!l || !m) {
          add(path, reason::kNotASentenceCode, print(p->formula.name()));
        } else if (!a || !b || !(a->formula == *l) || !(b->formula == *m)) {
          add(path, reason::kNumeralDecodeMismatch, "comp premises do not match the codes");
        }
        return;
      }
    }
  }

  static bool geometric_axiom(Rule r, const Formula& f) {
    const Term& lhs = f.lhs();
    const Term& rhs = f.rhs();
    switch (r) {
      case Rule::kQg4:
        return lhs.kind() == TermKind::kPlus && is_zero(lhs.children()[1]) &&
               rhs == lhs.children()[0];
      case Rule::kQg5: {
        if (lhs.kind() != TermKind::kPlus) return false;
        auto y = predecessor(lhs.children()[1]);
        return y && rhs == Term::successor(Term::plus(lhs.children()[0], *y));
      }
      case Rule::kQg6:
        return lhs.kind() == TermKind::kTimes && is_zero(lhs.children()[1]) && is_zero(rhs);
      case Rule::kQg7: {
        if (lhs.kind() != TermKind::kTimes) return false;
        auto y = predecessor(lhs.children()[1]);
        const Term& x = lhs.children()[0];
        return y && rhs == Term::plus(Term::times(x, *y), x);
      }
      default:
        return false;
    }
  }

  SystemId system_;
  ValidationReport report_;
  VariableSet free_;
  VariableSet bound_;
  std::set<std::string> qg3_eigen_;
};

}  // namespace

bool in_language(const Formula& f, SystemId system) {
  if (!is_arithmetic_system(system)) return true;
  switch (f.kind()) {
    case FormulaKind::kEqual: return f.lhs().is_arithmetic() && f.rhs().is_arithmetic();
    case FormulaKind::kTruth: {
      const Term& n = f.name();
      if (n.is_arithmetic()) return true;
      return system == SystemId::kLPTNComp && n.kind() == TermKind::kFunction &&
             n.symbol() == FunctionSymbol::kAndDot &&
             std::all_of(n.children().begin(), n.children().end(),
                         [](const Term& c) { return c.is_numeral(); });
    }
    case FormulaKind::kTop:
    case FormulaKind::kBottom: return true;
    case FormulaKind::kNot: return in_language(f.operand(), system);
    case FormulaKind::kAnd: return in_language(f.left(), system) && in_language(f.right(), system);
    case FormulaKind::kForall: return in_language(f.body(), system);
  }
  return true;
}

ValidationReport check(const Derivation& d, SystemId system) {
  return Checker(system).run(d);
}

ValidationReport check_lgt(const Derivation& d) { return check(d, SystemId::kLGT); }
ValidationReport check_qg(const Derivation& d) { return check(d, SystemId::kQg); }
ValidationReport check_lptn(const Derivation& d, bool compositional) {
  return check(d, compositional ? SystemId::kLPTNComp : SystemId::kLPTN);
}

}  // namespace gtcut
