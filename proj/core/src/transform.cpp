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

#include "gtcut/transform.hpp"

#include <algorithm>
#include <sstream>

#include "gtcut/coding.hpp"
#include "gtcut/text.hpp"
#include "transform_internal.hpp"

namespace gtcut {
namespace detail {

std::string Ctx::fresh_var(const std::string& stem) {
  std::string base = stem;
  while (!base.empty() && (std::isdigit(static_cast<unsigned char>(base.back())) || base.back() == '_')) {
    base.pop_back();
  }
  if (base.empty()) base = "v";
  std::string v = fresh_variable(used, base + "_");
  used.insert(v);
  return v;
}

void Ctx::spend() {
  if (fuel == 0) throw Error(ErrorCode::kFuelExhausted, "transformation ran out of fuel");
  --fuel;
}

void collect_proof_variables(const Derivation& d, VariableSet& out) {
  for (const auto& o : d.conclusion().ante) collect_variables(o.formula, out);
  for (const auto& o : d.conclusion().succ) collect_variables(o.formula, out);
  for (const auto& p : d.params()) collect_variables(p, out);
  for (const auto& p : d.premises()) collect_proof_variables(p, out);
}

Ctx make_ctx(SystemId system, const std::vector<const Derivation*>& inputs, std::size_t fuel) {
  Ctx ctx;
  ctx.system = system;
  OccId top = 0;
  for (const Derivation* d : inputs) {
    top = std::max(top, max_occurrence_id(*d));
    collect_proof_variables(*d, ctx.used);
  }
  ctx.ids = IdAllocator(top + 1);
  ctx.fuel = fuel;
  return ctx;
}

bool is_principal(const Derivation& d, OccId id) {
  return std::find(d.principal().begin(), d.principal().end(), id) != d.principal().end();
}

std::optional<std::string> eigenvariable(const Derivation& d) {
  if (d.rule() == Rule::kAllRight) {
    if (!d.params().empty() && d.params()[0].is_variable()) return d.params()[0].name();
    if (d.principal().empty() || d.active().empty() || d.active()[0].empty()) return std::nullopt;
    const Occurrence* p = d.conclusion().lookup(d.principal()[0]);
    const Occurrence* a = d.premises()[0].conclusion().lookup(d.active()[0][0]);
    if (!p || !a || p->formula.kind() != FormulaKind::kForall) return std::nullopt;
    auto y = match_instance(p->formula.body(), p->formula.variable(), a->formula,
                            Term::variable(p->formula.variable()));
    if (y && y->is_variable()) return y->name();
    return std::nullopt;
  }
  if (d.rule() == Rule::kQg3) {
    if (d.active().size() < 2 || d.active()[1].empty()) return std::nullopt;
    const Occurrence* a = d.premises()[1].conclusion().lookup(d.active()[1][0]);
    if (a && a->formula.kind() == FormulaKind::kEqual && a->formula.lhs().is_variable()) {
      return a->formula.lhs().name();
    }
  }
  return std::nullopt;
}

Derivation relabel_root(const Derivation& d, const std::map<OccId, OccId>& m) {
  auto map_id = [&](OccId id) {
    auto it = m.find(id);
    return it == m.end() ? id : it->second;
  };
  DerivationNode n = d.node();
  for (auto& o : n.conclusion.ante) o.id = map_id(o.id);
  for (auto& o : n.conclusion.succ) o.id = map_id(o.id);
  for (auto& p : n.principal) p = map_id(p);
  std::map<OccId, std::vector<OccId>> lineage;
  for (auto& [k, v] : n.lineage) lineage[map_id(k)] = v;
  n.lineage = std::move(lineage);
  return make_node(std::move(n));
}

namespace {

void erase_occurrence(DerivationNode& n, OccId id) {
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    auto& v = n.conclusion.side(s);
    v.erase(std::remove_if(v.begin(), v.end(), [&](const Occurrence& o) { return o.id == id; }),
            v.end());
  }
  n.lineage.erase(id);
}

}  // namespace

Derivation axiom_without(const Derivation& d, OccId id) {
  DerivationNode n = d.node();
  erase_occurrence(n, id);
  return make_node(std::move(n));
}

// ----------------------------------------------------------- substitution

Derivation subst_raw(const Derivation& d, const std::string& x, const Term& t) {
  bool free_here = false;
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : d.conclusion().side(s)) {
      if (free_variables(o.formula).contains(x)) free_here = true;
    }
  }
  if (!free_here) return d;
  DerivationNode n = d.node();
  VariableSet tv = free_variables(t);
  if (auto y = eigenvariable(d); y && tv.contains(*y)) {
    throw Error(ErrorCode::kEigenvariableCollision,
                "substituted term contains eigenvariable " + *y);
  }
  for (auto& o : n.conclusion.ante) o.formula = substitute(o.formula, x, t);
  for (auto& o : n.conclusion.succ) o.formula = substitute(o.formula, x, t);
  if (d.rule() == Rule::kAllRight) {
    // The eigenvariable is a variable and stays untouched.
  } else {
    for (auto& p : n.params) p = substitute(p, x, t);
  }
  for (auto& p : n.premises) p = subst_raw(p, x, t);
  return make_node(std::move(n));
}

Derivation freshen_raw(const Derivation& d, Ctx& ctx, const VariableSet* only) {
  if (d.premises().empty()) return d;
  DerivationNode n = d.node();
  bool changed = false;
  for (auto& p : n.premises) {
    Derivation q = freshen_raw(p, ctx, only);
    if (q.identity() != p.identity()) changed = true;
    p = q;
  }
  if (auto y = eigenvariable(d); y && (!only || only->contains(*y))) {
    std::string z = ctx.fresh_var(*y);
    Term zt = Term::variable(z);
    if (d.rule() == Rule::kAllRight) {
      n.premises[0] = subst_raw(n.premises[0], *y, zt);
      n.params = {zt};
    } else {
      n.premises[1] = subst_raw(n.premises[1], *y, zt);
      const Occurrence* a0 = n.premises[0].conclusion().lookup(n.active[0][0]);
      n.params = {a0 ? a0->formula.lhs() : Term::zero(), zt};
    }
    changed = true;
  }
  if (!changed) return d;
  return make_node(std::move(n));
}

// -------------------------------------------------------------- weakening

namespace {

Derivation weaken_walk(const Derivation& d, const std::vector<NewFormula>& extra, Ctx& ctx,
                       std::vector<OccId>& added) {
  DerivationNode n = d.node();
  std::vector<std::vector<OccId>> below(n.premises.size());
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    n.premises[i] = weaken_walk(n.premises[i], extra, ctx, below[i]);
  }
  added.clear();
  for (std::size_t k = 0; k < extra.size(); ++k) {
    OccId id = ctx.ids.fresh();
    n.conclusion.side(extra[k].side).push_back({extra[k].formula, id});
    std::vector<OccId> anc;
    for (std::size_t i = 0; i < n.premises.size(); ++i) anc.push_back(below[i][k]);
    n.lineage[id] = std::move(anc);
    added.push_back(id);
  }
  return make_node(std::move(n));
}

}  // namespace

Weakened weaken_raw(const Derivation& d, const std::vector<NewFormula>& extra, Ctx& ctx) {
  if (extra.empty()) return {d, {}};
  VariableSet fv;
  for (const auto& e : extra) {
    VariableSet v = free_variables(e.formula);
    fv.insert(v.begin(), v.end());
    collect_variables(e.formula, ctx.used);
  }
  Derivation base = fv.empty() ? d : freshen_raw(d, ctx, &fv);
  Weakened w{base, {}};
  w.d = weaken_walk(base, extra, ctx, w.added);
  return w;
}

// -------------------------------------------------------------- inversion

namespace {

enum class Target { kTruth, kNeg, kAndLeft, kAndRight, kAllRight, kComp };

struct Plan {
  Target kind;
  // One list of components per output.
  std::vector<std::vector<NewFormula>> outputs;
};

Plan plan_for(const Formula& f, Side side, const std::string& y) {
  const Side L = Side::kAntecedent;
  const Side R = Side::kSuccedent;
  switch (f.kind()) {
    case FormulaKind::kTruth: {
      const Term& n = f.name();
      if (n.is_numeral()) {
        Formula inner = Formula::top();
        try {
          inner = decode_formula(n.value());
        } catch (const Error&) {
          throw Error(ErrorCode::kTargetMismatch, "T-atom does not name a formula");
        }
        return {Target::kTruth, {{{side, inner}}}};
      }
      if (side == R && n.kind() == TermKind::kFunction && n.symbol() == FunctionSymbol::kAndDot &&
          n.children()[0].is_numeral() && n.children()[1].is_numeral()) {
        Formula a = decode_formula(n.children()[0].value());
        Formula b = decode_formula(n.children()[1].value());
        return {Target::kComp, {{{R, a}}, {{R, b}}}};
      }
      break;
    }
    case FormulaKind::kNot:
      return {Target::kNeg, {{{side == L ? R : L, f.operand()}}}};
    case FormulaKind::kAnd:
      if (side == L) return {Target::kAndLeft, {{{L, f.left()}, {L, f.right()}}}};
      return {Target::kAndRight, {{{R, f.left()}}, {{R, f.right()}}}};
    case FormulaKind::kForall:
      if (side == R) {
        return {Target::kAllRight, {{{R, substitute(f.body(), f.variable(), Term::variable(y))}}}};
      }
      break;
    default:
      break;
  }
  throw Error(ErrorCode::kTargetMismatch, "no invertible rule for " + print(f) + " in the " +
                                              std::string(side_name(side)));
}

bool rule_matches(Target t, Rule r) {
  switch (t) {
    case Target::kTruth: return r == Rule::kTruthLeft || r == Rule::kTruthRight;
    case Target::kNeg: return r == Rule::kNegLeft || r == Rule::kNegRight;
    case Target::kAndLeft: return r == Rule::kAndLeft;
    case Target::kAndRight: return r == Rule::kAndRight;
    case Target::kAllRight: return r == Rule::kAllRight;
    case Target::kComp: return r == Rule::kCompAnd;
  }
  return false;
}

std::vector<Inverted> invert_walk(const Derivation& d, OccId target, const Plan& plan,
                                  const std::string& y, Ctx& ctx) {
  ctx.spend();
  const std::size_t outs = plan.outputs.size();
  if (is_principal(d, target) && !is_axiom(d.rule())) {
    if (!rule_matches(plan.kind, d.rule())) {
      throw Error(ErrorCode::kInvalidDerivation, "principal rule does not match the connective");
    }
    std::vector<Inverted> result;
    for (std::size_t j = 0; j < outs; ++j) {
      std::size_t i = outs == 2 ? j : 0;
      std::map<OccId, OccId> m;
      for (const auto& [c, anc] : d.lineage()) m[anc[i]] = c;
      Derivation p = d.premises()[i];
      std::vector<OccId> comps = d.active()[i];
      if (plan.kind == Target::kAndLeft && comps.size() == 2) {
        const Occurrence* first = p.conclusion().lookup(comps[0]);
        if (first && !(first->formula == plan.outputs[0][0].formula)) std::swap(comps[0], comps[1]);
      }
      if (plan.kind == Target::kAllRight) {
        auto v = eigenvariable(d);
        if (v && *v != y) {
          VariableSet only{y};
          p = freshen_raw(p, ctx, &only);
          p = subst_raw(p, *v, Term::variable(y));
        }
      }
      result.push_back({relabel_root(p, m), comps});
    }
    return result;
  }
  if (is_axiom(d.rule())) {
    std::vector<Inverted> result;
    for (std::size_t j = 0; j < outs; ++j) {
      DerivationNode n = d.node();
      erase_occurrence(n, target);
      std::vector<OccId> comps;
      for (const auto& c : plan.outputs[j]) {
        OccId id = ctx.ids.fresh();
        n.conclusion.side(c.side).push_back({c.formula, id});
        n.lineage[id] = {};
        comps.push_back(id);
      }
      result.push_back({make_node(std::move(n)), comps});
    }
    return result;
  }
  auto it = d.lineage().find(target);
  if (it == d.lineage().end()) throw Error(ErrorCode::kBrokenLineage, "target has no lineage");
  std::vector<std::vector<Inverted>> above;
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    above.push_back(invert_walk(d.premises()[i], it->second[i], plan, y, ctx));
  }
  std::vector<Inverted> result;
  for (std::size_t j = 0; j < outs; ++j) {
    DerivationNode n = d.node();
    erase_occurrence(n, target);
    for (std::size_t i = 0; i < n.premises.size(); ++i) n.premises[i] = above[i][j].d;
    std::vector<OccId> comps;
    for (std::size_t k = 0; k < plan.outputs[j].size(); ++k) {
      OccId id = ctx.ids.fresh();
      n.conclusion.side(plan.outputs[j][k].side).push_back({plan.outputs[j][k].formula, id});
      std::vector<OccId> anc;
      for (std::size_t i = 0; i < n.premises.size(); ++i) anc.push_back(above[i][j].comps[k]);
      n.lineage[id] = std::move(anc);
      comps.push_back(id);
    }
    result.push_back({make_node(std::move(n)), comps});
  }
  return result;
}

}  // namespace

std::vector<Inverted> invert_raw(const Derivation& d, OccId target, Ctx& ctx,
                                 const std::optional<std::string>& variable) {
  auto where = d.conclusion().find(target);
  if (!where) throw Error(ErrorCode::kUnknownOccurrence, "no occurrence " + std::to_string(target));
  const Formula& f = d.conclusion().side(where->first)[where->second].formula;
  std::string y;
  Derivation base = d;
  if (f.kind() == FormulaKind::kForall && where->first == Side::kSuccedent) {
    if (variable) {
      y = *variable;
      ctx.used.insert(y);
    } else {
      y = ctx.fresh_var(f.variable());
    }
    VariableSet only{y};
    base = freshen_raw(d, ctx, &only);
  }
  Plan plan = plan_for(f, where->first, y);
  return invert_walk(base, target, plan, y, ctx);
}

// ------------------------------------------------------------ contraction

namespace {

Derivation contract_walk(const Derivation& d, OccId a, OccId b, Ctx& ctx);

// `p` is principal, `q` is the other copy. The result keeps id `p`.
Derivation contract_principal(const Derivation& d, OccId p, OccId q, Ctx& ctx) {
  DerivationNode n = d.node();
  auto lin = d.lineage().at(q);
  if (d.rule() == Rule::kAllLeft) {
    const Occurrence* po = d.conclusion().lookup(p);
    OccId copy = d.active()[0][0];
    const Occurrence* c = d.premises()[0].conclusion().lookup(copy);
    if (!c || !(c->formula == po->formula)) copy = d.active()[0][1];
    n.premises[0] = contract_walk(d.premises()[0], copy, lin[0], ctx);
  } else {
    std::optional<std::string> y;
    if (d.rule() == Rule::kAllRight) y = eigenvariable(d);
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      Derivation prem = d.premises()[i];
      if (y) {
        VariableSet only{*y};
        prem = freshen_raw(prem, ctx, &only);
      }
      auto outs = invert_raw(prem, lin[i], ctx, y);
      const bool split = d.rule() == Rule::kAndRight || d.rule() == Rule::kCompAnd;
      Inverted inv = outs[split ? i : 0];
      Derivation cur = inv.d;
      std::vector<bool> used(inv.comps.size(), false);
      for (OccId act : d.active()[i]) {
        const Occurrence* ao = cur.conclusion().lookup(act);
        for (std::size_t k = 0; k < inv.comps.size(); ++k) {
          if (used[k]) continue;
          auto cw = cur.conclusion().find(inv.comps[k]);
          auto aw = cur.conclusion().find(act);
          if (cw && aw && cw->first == aw->first &&
              cur.conclusion().side(cw->first)[cw->second].formula == ao->formula) {
            used[k] = true;
            cur = contract_walk(cur, act, inv.comps[k], ctx);
            break;
          }
        }
      }
      n.premises[i] = cur;
    }
  }
  erase_occurrence(n, q);
  return make_node(std::move(n));
}

Derivation contract_walk(const Derivation& d, OccId a, OccId b, Ctx& ctx) {
  ctx.spend();
  const bool pa = is_principal(d, a);
  const bool pb = is_principal(d, b);
  if (is_axiom(d.rule())) {
    if (pb && !pa) {
      DerivationNode n = d.node();
      erase_occurrence(n, a);
      return relabel_root(make_node(std::move(n)), {{b, a}});
    }
    return axiom_without(d, b);
  }
  if (!pa && !pb) {
    DerivationNode n = d.node();
    const auto& la = d.lineage().at(a);
    const auto& lb = d.lineage().at(b);
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      n.premises[i] = contract_walk(n.premises[i], la[i], lb[i], ctx);
    }
    erase_occurrence(n, b);
    return make_node(std::move(n));
  }
  if (pa) return contract_principal(d, a, b, ctx);
  return relabel_root(contract_principal(d, b, a, ctx), {{b, a}});
}

}  // namespace

Derivation contract_raw(const Derivation& d, OccId a, OccId b, Ctx& ctx) {
  auto wa = d.conclusion().find(a);
  auto wb = d.conclusion().find(b);
  if (!wa || !wb) throw Error(ErrorCode::kUnknownOccurrence, "contraction occurrence missing");
  if (a == b || wa->first != wb->first ||
      !(d.conclusion().side(wa->first)[wa->second].formula ==
        d.conclusion().side(wb->first)[wb->second].formula)) {
    throw Error(ErrorCode::kOccurrenceMismatch,
                "contraction needs two occurrences of one formula on one side");
  }
  return contract_walk(d, a, b, ctx);
}

// ------------------------------------------------------------------- drop

Derivation drop_raw(const Derivation& d, OccId o, Ctx& ctx) {
  ctx.spend();
  if (is_axiom(d.rule())) {
    if (!is_principal(d, o)) return axiom_without(d, o);
    auto where = d.conclusion().find(o);
    if (d.rule() == Rule::kRefMinus && where && where->first == Side::kSuccedent) {
      const Formula& f = d.conclusion().succ[where->second].formula;
      DerivationNode n = d.node();
      OccId left = 0;
      for (OccId p : d.principal()) {
        if (p != o) left = p;
      }
      erase_occurrence(n, o);
      n.rule = Rule::kQg1;
      n.principal = {left};
      if (f.kind() == FormulaKind::kEqual && predecessor(f.lhs()) && f.rhs().is_numeral() &&
          f.rhs().value() == 0) {
        return make_node(std::move(n));
      }
    }
    throw Error(ErrorCode::kInvalidDerivation, "occurrence cannot be dropped from this axiom");
  }
  if (is_principal(d, o)) {
    throw Error(ErrorCode::kInvalidDerivation, "occurrence to drop is principal");
  }
  DerivationNode n = d.node();
  const auto& lin = d.lineage().at(o);
  for (std::size_t i = 0; i < n.premises.size(); ++i) n.premises[i] = drop_raw(n.premises[i], lin[i], ctx);
  erase_occurrence(n, o);
  return make_node(std::move(n));
}

}  // namespace detail

// ------------------------------------------------------------ certificates

bool Certificate::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

std::string Certificate::summary() const {
  std::ostringstream out;
  out << "before: n=" << before.length << " m=" << before.cut_rank << " k=" << before.proof_tau
      << "\nafter:  n=" << after.length << " m=" << after.cut_rank << " k=" << after.proof_tau
      << "\n";
  for (const auto& c : checks) {
    out << (c.ok ? "  ok   " : "  FAIL ") << c.name << ": " << c.detail << "\n";
  }
  return out.str();
}

namespace {

void require_valid(const Derivation& d, SystemId system) {
  ValidationReport r = check(d, system);
  if (r.valid()) return;
  if (r.has(reason::kRefMinusTPrincipal)) {
    throw Error(ErrorCode::kUnsupportedSystem,
                "identity axioms on T-atoms break the invertibility of the truth rules");
  }
  const Violation& v = r.violations.front();
  throw Error(ErrorCode::kInvalidDerivation,
              "input does not validate: " + v.reason + " at '" + v.path + "': " + v.detail);
}

void bound(Certificate& c, std::string name, std::size_t have, std::size_t limit) {
  c.checks.push_back({std::move(name), std::to_string(have) + " <= " + std::to_string(limit),
                      have <= limit});
}

void finish(TransformResult& r, const TransformOptions& options, SystemId system) {
  for (std::size_t i = 0; i < r.outputs.size(); ++i) {
    ValidationReport rep = check(r.outputs[i], system);
    std::string detail = rep.valid() ? "kernel accepts output " + std::to_string(i)
                                     : rep.violations.front().reason + " at '" +
                                           rep.violations.front().path + "'";
    r.certificate.checks.push_back({"valid", detail, rep.valid()});
  }
  if (options.enforce && !r.certificate.ok()) {
    throw Error(ErrorCode::kCertificateFailure, r.certificate.summary());
  }
}

std::map<OccId, OccId> identity_map(const Sequent& before, const Sequent& after) {
  std::map<OccId, OccId> m;
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : before.side(s)) {
      if (after.lookup(o.id)) m[o.id] = o.id;
    }
  }
  return m;
}

void standard_bounds(Certificate& c) {
  bound(c, "length", c.after.length, c.before.length);
  bound(c, "cut rank", c.after.cut_rank, c.before.cut_rank);
  bound(c, "T-complexity", c.after.proof_tau, c.before.proof_tau);
}

}  // namespace

TransformResult weaken(const Derivation& d, const std::vector<Formula>& theta,
                       const std::vector<Formula>& lambda, const TransformOptions& options) {
  require_valid(d, options.system);
  if (is_arithmetic_system(options.system)) {
    VariableSet proof_vars, free_new, bound_new;
    detail::collect_proof_variables(d, proof_vars);
    for (const auto& f : theta) {
      auto fv = free_variables(f);
      auto bv = bound_variables(f);
      free_new.insert(fv.begin(), fv.end());
      bound_new.insert(bv.begin(), bv.end());
    }
    for (const auto& f : lambda) {
      auto fv = free_variables(f);
      auto bv = bound_variables(f);
      free_new.insert(fv.begin(), fv.end());
      bound_new.insert(bv.begin(), bv.end());
    }
    VariableSet proof_bound;
    visit(d, [&](const std::string&, const Derivation& n) {
      for (const auto& o : n.conclusion().ante) {
        auto bv = bound_variables(o.formula);
        proof_bound.insert(bv.begin(), bv.end());
      }
      for (const auto& o : n.conclusion().succ) {
        auto bv = bound_variables(o.formula);
        proof_bound.insert(bv.begin(), bv.end());
      }
    });
    for (const auto& v : free_new) {
      if (proof_bound.contains(v)) {
        throw Error(ErrorCode::kVariableCollision, v + " is bound in the proof");
      }
    }
    for (const auto& v : bound_new) {
      if (proof_vars.contains(v) && !proof_bound.contains(v)) {
        throw Error(ErrorCode::kVariableCollision, v + " is free in the proof");
      }
    }
  }
  auto ctx = detail::make_ctx(options.system, {&d}, options.fuel);
  std::vector<NewFormula> extra;
  for (const auto& f : theta) extra.push_back({Side::kAntecedent, f});
  for (const auto& f : lambda) extra.push_back({Side::kSuccedent, f});
  auto w = detail::weaken_raw(d, extra, ctx);
  TransformResult r;
  r.outputs = {w.d};
  r.focus = w.added;
  r.certificate.before = compute_measures(d);
  r.certificate.after = compute_measures(w.d);
  r.certificate.id_map = identity_map(d.conclusion(), w.d.conclusion());
  bound(r.certificate, "length", r.certificate.after.length, r.certificate.before.length);
  bound(r.certificate, "cut rank", r.certificate.after.cut_rank, r.certificate.before.cut_rank);
  bound(r.certificate, "T-complexity", r.certificate.after.proof_tau, r.certificate.before.proof_tau);
  for (OccId id : w.added) bound(r.certificate, "tau of added occurrence", r.certificate.after.tau_of(id), 0);
  for (const auto& [old, now] : r.certificate.id_map) {
    bound(r.certificate, "tau of kept occurrence", r.certificate.after.tau_of(now),
          r.certificate.before.tau_of(old));
  }
  PlainSequent want = plain(d.conclusion());
  want.ante.insert(want.ante.end(), theta.begin(), theta.end());
  want.succ.insert(want.succ.end(), lambda.begin(), lambda.end());
  r.certificate.checks.push_back({"end-sequent", print(want), same_sequent(plain(w.d.conclusion()), want)});
  finish(r, options, options.system);
  return r;
}

TransformResult substitute_proof(const Derivation& d, const std::string& x, const Term& t,
                                 const TransformOptions& options) {
  require_valid(d, options.system);
  VariableSet tv = free_variables(t);
  std::string clash;
  visit(d, [&](const std::string&, const Derivation& n) {
    if (auto y = detail::eigenvariable(n); y && tv.contains(*y)) clash = *y;
  });
  if (!clash.empty()) {
    throw Error(ErrorCode::kEigenvariableCollision,
                "term contains " + clash + ", an eigenvariable of the proof");
  }
  Derivation out = detail::subst_raw(d, x, t);
  TransformResult r;
  r.outputs = {out};
  r.certificate.before = compute_measures(d);
  r.certificate.after = compute_measures(out);
  r.certificate.id_map = identity_map(d.conclusion(), out.conclusion());
  standard_bounds(r.certificate);
  bool same_tau = r.certificate.before.tau == r.certificate.after.tau;
  r.certificate.checks.push_back({"tau map", same_tau ? "pointwise equal" : "differs", same_tau});
  PlainSequent want = plain(d.conclusion());
  for (auto& f : want.ante) f = substitute(f, x, t);
  for (auto& f : want.succ) f = substitute(f, x, t);
  r.certificate.checks.push_back({"end-sequent", print(want), same_sequent(plain(out.conclusion()), want)});
  finish(r, options, options.system);
  return r;
}

TransformResult invert(const Derivation& d, OccId target, const TransformOptions& options,
                       std::optional<std::string> variable) {
  require_valid(d, options.system);
  auto where = d.conclusion().find(target);
  if (!where) throw Error(ErrorCode::kUnknownOccurrence, "no occurrence " + std::to_string(target));
  const Formula f = d.conclusion().side(where->first)[where->second].formula;
  if (variable) {
    for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : d.conclusion().side(s)) {
        if (free_variables(o.formula).contains(*variable)) {
          throw Error(ErrorCode::kEigenvariableCollision,
                      *variable + " is free in the end-sequent");
        }
      }
    }
  }
  auto ctx = detail::make_ctx(options.system, {&d}, options.fuel);
  auto outs = detail::invert_raw(d, target, ctx, variable);
  TransformResult r;
  r.certificate.before = compute_measures(d);
  const std::size_t tau_target = r.certificate.before.tau_of(target);
  for (std::size_t j = 0; j < outs.size(); ++j) {
    r.outputs.push_back(outs[j].d);
    Measures after = compute_measures(outs[j].d);
    if (j == 0) {
      r.certificate.after = after;
      r.focus = outs[j].comps;
    } else {
      r.focus_second = outs[j].comps;
    }
    const std::string tag = outs.size() > 1 ? " (output " + std::to_string(j) + ")" : "";
    bound(r.certificate, "length" + tag, after.length, r.certificate.before.length);
    bound(r.certificate, "cut rank" + tag, after.cut_rank, r.certificate.before.cut_rank);
    bound(r.certificate, "T-complexity" + tag, after.proof_tau, r.certificate.before.proof_tau);
    for (OccId c : outs[j].comps) {
      std::size_t tc = after.tau_of(c);
      if (f.kind() == FormulaKind::kTruth && f.name().is_numeral() && tau_target > 0) {
        r.certificate.checks.push_back({"strict tau decrease" + tag,
                                        std::to_string(tc) + " < " + std::to_string(tau_target),
                                        tc < tau_target});
      } else {
        bound(r.certificate, "component tau" + tag, tc, tau_target);
      }
    }
    for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : d.conclusion().side(s)) {
        if (o.id == target) continue;
        if (!outs[j].d.conclusion().lookup(o.id)) {
          r.certificate.checks.push_back({"side occurrence kept" + tag, std::to_string(o.id), false});
          continue;
        }
        if (j == 0) r.certificate.id_map[o.id] = o.id;
        bound(r.certificate, "side tau" + tag, after.tau_of(o.id), r.certificate.before.tau_of(o.id));
      }
    }
  }
  finish(r, options, options.system);
  return r;
}

TransformResult contract(const Derivation& d, OccId a, OccId b, const TransformOptions& options) {
  require_valid(d, options.system);
  auto ctx = detail::make_ctx(options.system, {&d}, options.fuel);
  Derivation out = detail::contract_raw(d, a, b, ctx);
  TransformResult r;
  r.outputs = {out};
  r.focus = {a};
  r.certificate.before = compute_measures(d);
  r.certificate.after = compute_measures(out);
  standard_bounds(r.certificate);
  std::size_t limit = std::max(r.certificate.before.tau_of(a), r.certificate.before.tau_of(b));
  bound(r.certificate, "merged tau", r.certificate.after.tau_of(a), limit);
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : d.conclusion().side(s)) {
      if (o.id == b) {
        r.certificate.id_map[b] = a;
        continue;
      }
      r.certificate.id_map[o.id] = o.id;
      if (o.id == a) continue;
      bound(r.certificate, "side tau", r.certificate.after.tau_of(o.id), r.certificate.before.tau_of(o.id));
    }
  }
  finish(r, options, options.system);
  return r;
}

}  // namespace gtcut
