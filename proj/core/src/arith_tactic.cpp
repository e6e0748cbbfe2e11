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

#include <set>

#include "gtcut/coding.hpp"
#include "gtcut/search.hpp"

namespace gtcut {
namespace {

bool closed_arithmetic(const Term& t) { return t.is_closed() && t.is_arithmetic(); }

bool closed_identity(const Formula& f) {
  return f.kind() == FormulaKind::kEqual && closed_arithmetic(f.lhs()) && closed_arithmetic(f.rhs());
}

Term num(const Natural& n) { return Term::numeral(n); }

// Records antecedent additions. Every helper leaves its result identity in
// the antecedent.
class Chain {
 public:
  explicit Chain(const Sequent& goal) {
    for (const auto& o : goal.ante) have_.insert(o.formula);
  }

  struct Step {
    Rule rule;
    Formula added;
  };

  const std::vector<Step>& steps() const { return steps_; }

  void add(Rule r, const Formula& f) {
    if (have_.insert(f).second) steps_.push_back({r, f});
  }

  void refl(const Term& t) { add(Rule::kEq1, Formula::equal(t, t)); }

  // x = y present; adds y = x.
  void sym(const Term& x, const Term& y) {
    if (x == y) return;
    refl(y);
    add(Rule::kEq2, Formula::equal(y, x));
  }

  // x = y and y = z present; adds x = z.
  void trans(const Term& x, const Term& y, const Term& z) {
    if (y == z || x == z) {
      if (x == z) refl(x);
      return;
    }
    if (x == y) return;  // y = z is x = z
    sym(y, z);
    add(Rule::kEq2, Formula::equal(x, z));
  }

  // Adds t = v for the value v of t and returns v.
  Term evaluate(const Term& t) {
    if (t.is_numeral()) {
      refl(t);
      return t;
    }
    if (t.kind() == TermKind::kSuccessor) {
      const Term& a = t.children()[0];
      Term va = evaluate(a);
      refl(t);
      sym(a, va);
      Term v = Term::successor(va);
      add(Rule::kEq2, Formula::equal(t, v));
      return v;
    }
    const Term& a = t.children()[0];
    const Term& b = t.children()[1];
    Term va = evaluate(a);
    Term vb = evaluate(b);
    const bool plus = t.kind() == TermKind::kPlus;
    auto build = [&](const Term& x, const Term& y) { return plus ? Term::plus(x, y) : Term::times(x, y); };
    refl(t);
    Term cur = t;
    if (!(a == va)) {
      sym(a, va);
      cur = build(va, b);
      add(Rule::kEq2, Formula::equal(t, cur));
    }
    if (!(b == vb)) {
      Term next = build(va, vb);
      // Rewrites t = va op b into t = va op vb via the mirrored b = vb.
      sym(b, vb);
      add(Rule::kEq2, Formula::equal(t, next));
      cur = next;
    }
    Term v = plus ? plus_numerals(va.value(), vb.value()) : times_numerals(va.value(), vb.value());
    trans(t, cur, v);
    return v;
  }

  // Adds n + m = (n+m).
  Term plus_numerals(const Natural& n, const Natural& m) {
    Term lhs = Term::plus(num(n), num(m));
    if (m == 0) {
      add(Rule::kQg4, Formula::equal(lhs, num(n)));
      return num(n);
    }
    Term k = plus_numerals(n, m - 1);
    Term inner = Term::plus(num(n), num(m - 1));
    add(Rule::kQg5, Formula::equal(lhs, Term::successor(inner)));
    sym(inner, k);
    Term v = Term::successor(k);
    add(Rule::kEq2, Formula::equal(lhs, v));
    return v;
  }

  // Adds n * m = (n*m).
  Term times_numerals(const Natural& n, const Natural& m) {
    Term lhs = Term::times(num(n), num(m));
    if (m == 0) {
      add(Rule::kQg6, Formula::equal(lhs, num(0)));
      return num(0);
    }
    Term p = times_numerals(n, m - 1);
    Term inner = Term::times(num(n), num(m - 1));
    add(Rule::kQg7, Formula::equal(lhs, Term::plus(inner, num(n))));
    sym(inner, p);
    Term mid = Term::plus(p, num(n));
    add(Rule::kEq2, Formula::equal(lhs, mid));
    Term q = plus_numerals(p.value(), n);
    trans(lhs, mid, q);
    return q;
  }

 private:
  std::set<Formula, FormulaLess> have_;
  std::vector<Step> steps_;
};

Derivation assemble(const Sequent& goal, const std::vector<Chain::Step>& steps, Rule closing,
                    const std::vector<Formula>& principal, IdAllocator& ids) {
  std::vector<Sequent> levels{goal};
  std::vector<std::map<OccId, OccId>> maps;
  std::vector<OccId> added;
  for (const auto& s : steps) {
    Sequent next;
    std::map<OccId, OccId> m;
    for (Side side : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : levels.back().side(side)) {
        OccId id = ids.fresh();
        next.side(side).push_back({o.formula, id});
        m[o.id] = id;
      }
    }
    OccId id = ids.fresh();
    next.ante.push_back({s.added, id});
    added.push_back(id);
    maps.push_back(std::move(m));
    levels.push_back(std::move(next));
  }
  const Sequent& top = levels.back();
  std::vector<OccId> p;
  std::set<OccId> taken;
  for (std::size_t k = 0; k < principal.size(); ++k) {
    const auto& side = (closing == Rule::kRefMinus && k == 1) ? top.succ : top.ante;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
      if (it->formula == principal[k] && !taken.contains(it->id)) {
        taken.insert(it->id);
        p.push_back(it->id);
        break;
      }
    }
  }
  Derivation d = make_axiom(closing, top, p);
  for (std::size_t i = steps.size(); i-- > 0;) {
    DerivationNode n;
    n.rule = steps[i].rule;
    n.conclusion = levels[i];
    for (const auto& [from, to] : maps[i]) n.lineage[from] = {to};
    n.active = {{added[i]}};
    n.premises = {d};
    d = make_node(std::move(n));
  }
  return d;
}

}  // namespace

std::optional<Derivation> arithmetic_closure(const Sequent& goal, IdAllocator& ids) {
  for (const auto& o : goal.succ) {
    const Formula& f = o.formula;
    if (!closed_identity(f) || eval_term(f.lhs()) != eval_term(f.rhs())) continue;
    Chain c(goal);
    if (!(f.lhs() == f.rhs())) {
      Term v = c.evaluate(f.lhs());
      Term w = c.evaluate(f.rhs());
      c.sym(f.rhs(), w);
      c.trans(f.lhs(), v, f.rhs());
    } else {
      c.refl(f.lhs());
    }
    return assemble(goal, c.steps(), Rule::kRefMinus, {f, f}, ids);
  }
  for (const auto& o : goal.ante) {
    const Formula& f = o.formula;
    if (!closed_identity(f)) continue;
    Natural a = eval_term(f.lhs());
    Natural b = eval_term(f.rhs());
    if (a == b) continue;
    Chain c(goal);
    Term va = c.evaluate(f.lhs());
    c.sym(f.lhs(), va);
    c.trans(va, f.lhs(), f.rhs());
    Term vb = c.evaluate(f.rhs());
    c.trans(va, f.rhs(), vb);
    while (a > 0 && b > 0) {
      --a;
      --b;
      c.add(Rule::kQg2, Formula::equal(num(a), num(b)));
    }
    if (a == 0) {
      c.sym(num(0), num(b));
      return assemble(goal, c.steps(), Rule::kQg1, {Formula::equal(num(b), num(0))}, ids);
    }
    return assemble(goal, c.steps(), Rule::kQg1, {Formula::equal(num(a), num(0))}, ids);
  }
  return std::nullopt;
}

}  // namespace gtcut
