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

#include <algorithm>

#include "gtcut/text.hpp"
#include "gtcut/transform.hpp"
#include "transform_internal.hpp"

namespace gtcut {
namespace detail {
namespace {

std::vector<Occurrence> others(const Sequent& s, std::initializer_list<OccId> skip) {
  std::vector<Occurrence> out;
  for (Side side : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : s.side(side)) {
      if (std::find(skip.begin(), skip.end(), o.id) == skip.end()) out.push_back(o);
    }
  }
  return out;
}

Side side_of(const Sequent& s, OccId id) { return s.find(id)->first; }

const Formula& formula_of(const Derivation& d, OccId id) { return d.conclusion().lookup(id)->formula; }

void erase(DerivationNode& n, OccId id) {
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    auto& v = n.conclusion.side(s);
    v.erase(std::remove_if(v.begin(), v.end(), [&](const Occurrence& o) { return o.id == id; }),
            v.end());
  }
  n.lineage.erase(id);
}

// Adds `occs` (with their own sides and ids) to the end-sequent of `d`.
Derivation weaken_keep(const Derivation& d, const Sequent& from, const std::vector<Occurrence>& occs,
                       Ctx& ctx) {
  std::vector<NewFormula> extra;
  for (const auto& o : occs) extra.push_back({side_of(from, o.id), o.formula});
  Weakened w = weaken_raw(d, extra, ctx);
  std::map<OccId, OccId> m;
  for (std::size_t k = 0; k < occs.size(); ++k) m[w.added[k]] = occs[k].id;
  return relabel_root(w.d, m);
}

// Maps the end-sequent ids of premise `i` of `node` to the ids of `node`.
void lift(const Derivation& node, std::size_t i, std::map<OccId, OccId>& m) {
  for (const auto& [c, anc] : node.lineage()) m[anc[i]] = c;
}

Derivation fresh_copy(const Derivation& d, Ctx& ctx, std::map<OccId, OccId>& m, bool freshen) {
  Derivation out = renumber(d, ctx.ids, &m);
  return freshen ? freshen_raw(out, ctx, nullptr) : out;
}

Derivation make_cut(const Derivation& x, OccId xa, const Derivation& y, OccId ya, Ctx& ctx) {
  auto xs = others(x.conclusion(), {xa});
  auto ys = others(y.conclusion(), {ya});
  Derivation xw = weaken_keep(x, y.conclusion(), ys, ctx);
  Derivation yw = weaken_keep(y, x.conclusion(), xs, ctx);
  // The premises get fresh root ids so the conclusion can keep the old ones.
  std::map<OccId, OccId> mx, my;
  for (const auto& o : xw.conclusion().ante) mx[o.id] = ctx.ids.fresh();
  for (const auto& o : xw.conclusion().succ) mx[o.id] = ctx.ids.fresh();
  for (const auto& o : yw.conclusion().ante) my[o.id] = ctx.ids.fresh();
  for (const auto& o : yw.conclusion().succ) my[o.id] = ctx.ids.fresh();
  DerivationNode n;
  n.rule = Rule::kCut;
  n.premises = {relabel_root(xw, mx), relabel_root(yw, my)};
  n.active = {{mx[xa]}, {my[ya]}};
  for (const auto& o : xs) {
    n.conclusion.side(side_of(x.conclusion(), o.id)).push_back(o);
    n.lineage[o.id] = {mx[o.id], my[o.id]};
  }
  for (const auto& o : ys) {
    n.conclusion.side(side_of(y.conclusion(), o.id)).push_back(o);
    n.lineage[o.id] = {mx[o.id], my[o.id]};
  }
  return make_node(std::move(n));
}

Derivation cut_or_reduce(const Derivation& x, OccId xa, const Derivation& y, OccId ya,
                         std::size_t allowance, Ctx& ctx) {
  if (logical_complexity(formula_of(x, xa)) + 1 <= allowance) return make_cut(x, xa, y, ya, ctx);
  return reduce_raw(x, xa, y, ya, allowance, ctx);
}

Derivation axiom_plus(const Derivation& axiom, OccId drop, const Derivation& from,
                      const std::vector<Occurrence>& extra, bool front) {
  DerivationNode n = axiom.node();
  erase(n, drop);
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    std::vector<Occurrence> add;
    for (const auto& o : extra) {
      if (side_of(from.conclusion(), o.id) == s) {
        add.push_back(o);
        n.lineage[o.id] = {};
      }
    }
    auto& v = n.conclusion.side(s);
    v.insert(front ? v.begin() : v.end(), add.begin(), add.end());
  }
  return make_node(std::move(n));
}

OccId other_principal(const Derivation& d, OccId id) {
  for (OccId p : d.principal()) {
    if (p != id) return p;
  }
  throw Error(ErrorCode::kInvalidDerivation, "axiom has a single principal occurrence");
}

Derivation permute_left(Derivation d0, OccId c0, const Derivation& d1, OccId c1,
                        std::size_t allowance, Ctx& ctx) {
  if (auto y = eigenvariable(d0); y && free_variables_of(d1.conclusion()).contains(*y)) {
    VariableSet only{*y};
    d0 = freshen_raw(d0, ctx, &only);
  }
  const auto lin = d0.lineage().at(c0);
  auto ctx1 = others(d1.conclusion(), {c1});
  DerivationNode n = d0.node();
  erase(n, c0);
  std::vector<std::map<OccId, OccId>> maps(n.premises.size());
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    Derivation copy = fresh_copy(d1, ctx, maps[i], i > 0);
    n.premises[i] = reduce_raw(n.premises[i], lin[i], copy, maps[i].at(c1), allowance, ctx);
  }
  for (const auto& o : ctx1) {
    n.conclusion.side(side_of(d1.conclusion(), o.id)).push_back(o);
    std::vector<OccId> anc;
    for (const auto& m : maps) anc.push_back(m.at(o.id));
    n.lineage[o.id] = std::move(anc);
  }
  return make_node(std::move(n));
}

Derivation permute_right(const Derivation& d0, OccId c0, Derivation d1, OccId c1,
                         std::size_t allowance, Ctx& ctx) {
  if (auto y = eigenvariable(d1); y && free_variables_of(d0.conclusion()).contains(*y)) {
    VariableSet only{*y};
    d1 = freshen_raw(d1, ctx, &only);
  }
  const auto lin = d1.lineage().at(c1);
  auto ctx0 = others(d0.conclusion(), {c0});
  DerivationNode n = d1.node();
  erase(n, c1);
  std::vector<std::map<OccId, OccId>> maps(n.premises.size());
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    Derivation copy = fresh_copy(d0, ctx, maps[i], i > 0);
    n.premises[i] = reduce_raw(copy, maps[i].at(c0), n.premises[i], lin[i], allowance, ctx);
  }
  for (Side s : {Side::kSuccedent, Side::kAntecedent}) {
    auto& v = n.conclusion.side(s);
    std::vector<Occurrence> add;
    for (const auto& o : ctx0) {
      if (side_of(d0.conclusion(), o.id) != s) continue;
      add.push_back(o);
      std::vector<OccId> anc;
      for (const auto& m : maps) anc.push_back(m.at(o.id));
      n.lineage[o.id] = std::move(anc);
    }
    v.insert(v.begin(), add.begin(), add.end());
  }
  return make_node(std::move(n));
}

// Merges the two premise copies of every context occurrence of a two-premise
// node `d`, then relabels them to the ids of `d`.
Derivation merge_shared(Derivation r, const Derivation& d, Ctx& ctx) {
  std::map<OccId, OccId> m;
  for (const auto& [c, anc] : d.lineage()) {
    r = contract_raw(r, anc[0], anc[1], ctx);
    m[anc[0]] = c;
  }
  return relabel_root(r, m);
}

Derivation key_case(const Derivation& d0, OccId c0, const Derivation& d1, OccId c1,
                    std::size_t allowance, Ctx& ctx) {
  const Rule r0 = d0.rule();
  const Rule r1 = d1.rule();
  std::map<OccId, OccId> up;
  if (r0 == Rule::kTruthRight && r1 == Rule::kTruthLeft) {
    Derivation r = reduce_raw(d0.premises()[0], d0.active()[0][0], d1.premises()[0],
                              d1.active()[0][0], allowance, ctx);
    lift(d0, 0, up);
    lift(d1, 0, up);
    return relabel_root(r, up);
  }
  if (r0 == Rule::kNegRight && r1 == Rule::kNegLeft) {
    Derivation r = cut_or_reduce(d1.premises()[0], d1.active()[0][0], d0.premises()[0],
                                 d0.active()[0][0], allowance, ctx);
    lift(d0, 0, up);
    lift(d1, 0, up);
    return relabel_root(r, up);
  }
  if (r0 == Rule::kAndRight && r1 == Rule::kAndLeft) {
    const Formula& f = formula_of(d0, c0);
    const Derivation& q = d1.premises()[0];
    OccId b1 = d1.active()[0][0];
    OccId b2 = d1.active()[0][1];
    if (!(formula_of(q, b1) == f.left())) std::swap(b1, b2);
    Derivation r = cut_or_reduce(d0.premises()[0], d0.active()[0][0], q, b1, allowance, ctx);
    r = cut_or_reduce(d0.premises()[1], d0.active()[1][0], r, b2, allowance, ctx);
    r = merge_shared(r, d0, ctx);
    lift(d1, 0, up);
    return relabel_root(r, up);
  }
  if (r0 == Rule::kAllRight && r1 == Rule::kAllLeft) {
    const Derivation& q = d1.premises()[0];
    OccId keep = d1.active()[0][0];
    OccId inst = d1.active()[0][1];
    if (!(formula_of(q, keep) == formula_of(d1, c1))) std::swap(keep, inst);
    const Formula& all = formula_of(d1, c1);
    const Formula& instance = formula_of(q, inst);
    Term s = d1.params().empty()
                 ? *match_instance(all.body(), all.variable(), instance, Term::variable(all.variable()))
                 : d1.params()[0];
    // The retained copy is cut first, at the same rank but on a shorter proof.
    Derivation r = reduce_raw(d0, c0, q, keep, allowance, ctx);
    // d0 already sits inside r, so its premise is used again as a copy.
    std::map<OccId, OccId> cm;
    Derivation p = fresh_copy(d0.premises()[0], ctx, cm, true);
    VariableSet fv = free_variables(s);
    p = freshen_raw(p, ctx, &fv);
    if (auto y = eigenvariable(d0)) p = subst_raw(p, *y, s);
    r = cut_or_reduce(p, cm.at(d0.active()[0][0]), r, inst, allowance, ctx);
    for (const auto& [c, anc] : d0.lineage()) {
      r = contract_raw(r, c, cm.at(anc[0]), ctx);
    }
    lift(d1, 0, up);
    return relabel_root(r, up);
  }
  throw Error(ErrorCode::kInvalidDerivation,
              std::string("cut between ") + std::string(rule_name(r0)) + " and " +
                  std::string(rule_name(r1)) + " has no reduction");
}

}  // namespace

VariableSet free_variables_of(const Sequent& s) {
  VariableSet out;
  for (Side side : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : s.side(side)) {
      VariableSet v = free_variables(o.formula);
      out.insert(v.begin(), v.end());
    }
  }
  return out;
}

Derivation reduce_raw(const Derivation& d0, OccId c0, const Derivation& d1, OccId c1,
                      std::size_t allowance, Ctx& ctx) {
  ctx.spend();
  if (is_axiom(d0.rule())) {
    if (!is_principal(d0, c0)) return axiom_plus(d0, c0, d1, others(d1.conclusion(), {c1}), false);
    if (d0.rule() == Rule::kTopAxiom) {
      return weaken_keep(drop_raw(d1, c1, ctx), d0.conclusion(), others(d0.conclusion(), {c0}), ctx);
    }
    if (d0.rule() == Rule::kRefMinus) {
      OccId p = other_principal(d0, c0);
      Derivation r = weaken_keep(d1, d0.conclusion(), others(d0.conclusion(), {c0, p}), ctx);
      return relabel_root(r, {{c1, p}});
    }
    throw Error(ErrorCode::kInvalidDerivation, "cut formula is principal on the wrong side");
  }
  if (is_axiom(d1.rule())) {
    if (!is_principal(d1, c1)) return axiom_plus(d1, c1, d0, others(d0.conclusion(), {c0}), true);
    if (d1.rule() == Rule::kBotAxiom || d1.rule() == Rule::kQg1) {
      return weaken_keep(drop_raw(d0, c0, ctx), d1.conclusion(), others(d1.conclusion(), {c1}), ctx);
    }
    if (d1.rule() == Rule::kRefMinus) {
      OccId q = other_principal(d1, c1);
      Derivation r = weaken_keep(d0, d1.conclusion(), others(d1.conclusion(), {c1, q}), ctx);
      return relabel_root(r, {{c0, q}});
    }
    throw Error(ErrorCode::kInvalidDerivation, "cut formula is principal on the wrong side");
  }
  if (!is_principal(d0, c0)) return permute_left(d0, c0, d1, c1, allowance, ctx);
  if (!is_principal(d1, c1)) return permute_right(d0, c0, d1, c1, allowance, ctx);
  return key_case(d0, c0, d1, c1, allowance, ctx);
}

}  // namespace detail

namespace {

void require_valid_input(const Derivation& d, SystemId system, const char* which) {
  ValidationReport r = check(d, system);
  if (r.valid()) return;
  if (r.has(reason::kRefMinusTPrincipal)) {
    throw Error(ErrorCode::kUnsupportedSystem,
                "identity axioms on T-atoms break the invertibility of the truth rules");
  }
  const Violation& v = r.violations.front();
  throw Error(ErrorCode::kInvalidDerivation, std::string(which) + " does not validate: " +
                                                 v.reason + " at '" + v.path + "': " + v.detail);
}

void add_check(Certificate& c, std::string name, const Natural& have, const Natural& limit) {
  auto show = [](const Natural& v) {
    std::string s = v.str();
    return s.size() > 24 ? "(" + std::to_string(s.size()) + "-digit number)" : s;
  };
  c.checks.push_back({std::move(name), show(have) + " <= " + show(limit), have <= limit});
}

void add_validity(Certificate& c, const Derivation& d, SystemId system) {
  ValidationReport rep = check(d, system);
  std::string detail = rep.valid() ? "kernel accepts the output"
                                   : rep.violations.front().reason + " at '" +
                                         rep.violations.front().path + "'";
  c.checks.push_back({"valid", detail, rep.valid()});
}

Derivation tidy_ids(const Derivation& d, IdAllocator& ids) {
  if (ids_unique(d)) return d;
  std::map<OccId, OccId> m;
  Derivation out = renumber(d, ids, &m);
  std::map<OccId, OccId> back;
  for (const auto& [old, now] : m) back[now] = old;
  return detail::relabel_root(out, back);
}

std::size_t proof_tau_max(const Derivation& a, const Derivation& b) {
  return std::max(compute_measures(a).proof_tau, compute_measures(b).proof_tau);
}

Derivation eliminate_pass(const Derivation& d, std::size_t rank, detail::Ctx& ctx) {
  if (d.premises().empty()) return d;
  DerivationNode n = d.node();
  for (auto& p : n.premises) p = eliminate_pass(p, rank, ctx);
  Derivation rebuilt = make_node(std::move(n));
  if (d.rule() != Rule::kCut) return rebuilt;
  const Derivation& p0 = rebuilt.premises()[0];
  const Derivation& p1 = rebuilt.premises()[1];
  OccId a0 = rebuilt.active()[0][0];
  OccId a1 = rebuilt.active()[1][0];
  if (logical_complexity(p0.conclusion().lookup(a0)->formula) + 1 != rank) return rebuilt;
  Derivation r = detail::reduce_raw(p0, a0, p1, a1, rank - 1, ctx);
  std::map<OccId, OccId> m;
  for (const auto& [c, anc] : rebuilt.lineage()) {
    r = detail::contract_raw(r, anc[0], anc[1], ctx);
    m[anc[0]] = c;
  }
  return detail::relabel_root(r, m);
}

}  // namespace

TransformResult reduce_cut(const Derivation& d0, OccId phi0, const Derivation& d1, OccId phi1,
                           const TransformOptions& options) {
  require_valid_input(d0, options.system, "left proof");
  require_valid_input(d1, options.system, "right proof");
  auto w0 = d0.conclusion().find(phi0);
  auto w1 = d1.conclusion().find(phi1);
  if (!w0 || !w1) throw Error(ErrorCode::kUnknownOccurrence, "cut occurrence not found");
  if (w0->first != Side::kSuccedent || w1->first != Side::kAntecedent ||
      !(d0.conclusion().succ[w0->second].formula == d1.conclusion().ante[w1->second].formula)) {
    throw Error(ErrorCode::kOccurrenceMismatch,
                "cut formula must be on the right of the left proof and the left of the right one");
  }
  const Formula phi = d0.conclusion().succ[w0->second].formula;
  auto ctx = detail::make_ctx(options.system, {&d0, &d1}, options.fuel);

  // Separate the two proofs: own ids, own eigenvariables.
  std::map<OccId, OccId> m1;
  Derivation e1 = renumber(d1, ctx.ids, &m1);
  VariableSet eig0;
  visit(d0, [&](const std::string&, const Derivation& n) {
    if (auto y = detail::eigenvariable(n)) eig0.insert(*y);
  });
  e1 = detail::freshen_raw(e1, ctx, &eig0);
  OccId e1phi = m1.at(phi1);

  // Building the cut checks that the contexts agree.
  Derivation cut = infer(Rule::kCut, {d0, e1}, {{phi0}, {e1phi}}, {}, {}, ctx.ids);

  const std::size_t cr0 = cut_rank(d0);
  const std::size_t cr1 = cut_rank(d1);
  const std::size_t m = std::max({cr0, cr1, logical_complexity(phi)});
  Derivation r = detail::reduce_raw(d0, phi0, e1, e1phi, m, ctx);
  std::map<OccId, OccId> back;
  for (const auto& [c, anc] : cut.lineage()) {
    r = detail::contract_raw(r, anc[0], anc[1], ctx);
    back[anc[0]] = c;
  }
  r = detail::relabel_root(r, back);
  // Hand back the ids of the left proof's context.
  std::map<OccId, OccId> to_d0;
  for (const auto& [c, anc] : cut.lineage()) to_d0[c] = anc[0];
  r = detail::relabel_root(r, to_d0);
  r = tidy_ids(r, ctx.ids);

  TransformResult res;
  res.outputs = {r};
  Certificate& cert = res.certificate;
  cert.before = compute_measures(cut);
  cert.after = compute_measures(r);
  for (const auto& [c, anc] : cut.lineage()) cert.id_map[anc[0]] = anc[0];
  const std::size_t n0 = derivation_length(d0);
  const std::size_t n1 = derivation_length(d1);
  add_check(cert, "length", cert.after.length, n0 + n1);
  add_check(cert, "cut rank", cert.after.cut_rank, m);
  add_check(cert, "T-complexity", cert.after.proof_tau, proof_tau_max(d0, d1));
  cert.checks.push_back({"end-sequent", print(plain(cut.conclusion())),
                         same_sequent(plain(r.conclusion()), plain(cut.conclusion()))});
  add_validity(cert, r, options.system);
  if (options.enforce && !cert.ok()) throw Error(ErrorCode::kCertificateFailure, cert.summary());
  return res;
}

TransformResult eliminate_cuts(const Derivation& d, const TransformOptions& options) {
  require_valid_input(d, options.system, "input");
  TransformResult res;
  Certificate& cert = res.certificate;
  cert.before = compute_measures(d);
  Derivation out = d;
  if (!is_cut_free(d)) {
    auto ctx = detail::make_ctx(options.system, {&d}, options.fuel);
    out = tidy_ids(detail::freshen_raw(d, ctx, nullptr), ctx.ids);
    for (std::size_t r = cut_rank(out); r > 0; r = cut_rank(out)) {
      out = eliminate_pass(out, r, ctx);
    }
    out = tidy_ids(out, ctx.ids);
  }
  res.outputs = {out};
  cert.after = compute_measures(out);
  for (const auto& o : d.conclusion().ante) cert.id_map[o.id] = o.id;
  for (const auto& o : d.conclusion().succ) cert.id_map[o.id] = o.id;
  cert.checks.push_back({"cut-free", std::to_string(cut_count(out)) + " cuts left", is_cut_free(out)});
  cert.checks.push_back({"end-sequent", print(plain(d.conclusion())),
                         same_sequent(plain(out.conclusion()), plain(d.conclusion()))});
  add_check(cert, "T-complexity", cert.after.proof_tau, cert.before.proof_tau);
  add_check(cert, "length", cert.after.length,
            hyperexp(cert.before.cut_rank, Natural(cert.before.length)));
  add_validity(cert, out, options.system);
  if (options.enforce && !cert.ok()) throw Error(ErrorCode::kCertificateFailure, cert.summary());
  return res;
}

}  // namespace gtcut
