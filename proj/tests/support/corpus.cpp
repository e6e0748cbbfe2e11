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


#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gtcut/coding.hpp"
#include "gtcut/text.hpp"
#include "gtcut/transform.hpp"

namespace gtcut::testing {

namespace {

constexpr Side L = Side::kAntecedent;
constexpr Side R = Side::kSuccedent;

const Formula& formula_at(const Derivation& d, OccId id) {
  const Occurrence* o = d.conclusion().lookup(id);
  if (!o) throw std::logic_error("no occurrence " + std::to_string(id));
  return o->formula;
}

// Descendant of premise occurrence `old` in the conclusion of `d`.
OccId follow(const Derivation& d, OccId old, std::size_t premise = 0) {
  for (const auto& [id, anc] : d.lineage()) {
    if (premise < anc.size() && anc[premise] == old) return id;
  }
  return 0;
}

void follow_all(const Derivation& d, std::set<OccId>& keep, std::size_t premise = 0) {
  std::set<OccId> next;
  for (OccId k : keep) {
    if (OccId n = follow(d, k, premise)) next.insert(n);
  }
  keep = std::move(next);
}

std::vector<Formula> without(const std::vector<Occurrence>& side, OccId skip) {
  std::vector<Formula> out;
  for (const auto& o : side) {
    if (o.id != skip) out.push_back(o.formula);
  }
  return out;
}

std::vector<Formula> formulas(const std::vector<Occurrence>& side) { return without(side, 0); }

}  // namespace

OccId last_id(const Sequent& seq, Side s, const Formula& f) {
  const auto& v = seq.side(s);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->formula == f) return it->id;
  }
  return 0;
}

Derivation Builder::identity(const Formula& phi, const PlainSequent& context) {
  auto with = [&](bool left, bool right) {
    PlainSequent p = context;
    if (left) p.ante.push_back(phi);
    if (right) p.succ.push_back(phi);
    return p;
  };
  switch (phi.kind()) {
    case FormulaKind::kEqual: {
      Sequent s = make_sequent(with(true, true), ids_);
      return make_axiom(Rule::kRefMinus, s, {s.ante.back().id, s.succ.back().id});
    }
    case FormulaKind::kTop: {
      Sequent s = make_sequent(with(true, true), ids_);
      return make_axiom(Rule::kTopAxiom, s, {s.succ.back().id});
    }
    case FormulaKind::kBottom: {
      Sequent s = make_sequent(with(true, true), ids_);
      return make_axiom(Rule::kBotAxiom, s, {s.ante.back().id});
    }
    case FormulaKind::kTruth: {
      Formula psi = decode_formula(eval_term(phi.name()));
      Derivation d = identity(psi, context);
      d = truth_right(d, d.conclusion().succ.back().id);
      return truth_left(d, last_id(d.conclusion(), L, psi));
    }
    case FormulaKind::kNot: {
      Derivation d = identity(phi.operand(), context);
      d = neg_left(d, d.conclusion().succ.back().id);
      return neg_right(d, last_id(d.conclusion(), L, phi.operand()));
    }
    case FormulaKind::kAnd: {
      PlainSequent c0 = context;
      c0.ante.push_back(phi.right());
      PlainSequent c1 = context;
      c1.ante.push_back(phi.left());
      Derivation d0 = identity(phi.left(), c0);
      Derivation d1 = identity(phi.right(), c1);
      Derivation d = and_right(d0, d0.conclusion().succ.back().id, d1,
                               d1.conclusion().succ.back().id);
      // The two conjuncts are the last two antecedent occurrences.
      const auto& ante = d.conclusion().ante;
      return and_left(d, ante[ante.size() - 1].id, ante[ante.size() - 2].id);
    }
    case FormulaKind::kForall: {
      VariableSet avoid;
      collect_variables(phi, avoid);
      for (const auto& f : context.ante) collect_variables(f, avoid);
      for (const auto& f : context.succ) collect_variables(f, avoid);
      std::string y = fresh_variable(avoid, "e");
      Formula inst = substitute(phi.body(), phi.variable(), Term::variable(y));
      PlainSequent c = context;
      c.ante.push_back(phi);
      Derivation d = identity(inst, c);
      d = all_left(d, last_id(d.conclusion(), L, phi), last_id(d.conclusion(), L, inst),
                   Term::variable(y));
      return all_right(d, d.conclusion().succ.back().id, phi.variable(), y);
    }
  }
  throw std::logic_error("unreachable");
}

Derivation Builder::neg_left(const Derivation& d, OccId s) {
  return infer(Rule::kNegLeft, {d}, {{s}}, {{L, Formula::negation(formula_at(d, s))}}, {}, ids_);
}

Derivation Builder::neg_right(const Derivation& d, OccId a) {
  return infer(Rule::kNegRight, {d}, {{a}}, {{R, Formula::negation(formula_at(d, a))}}, {}, ids_);
}

Derivation Builder::truth_left(const Derivation& d, OccId a) {
  return infer(Rule::kTruthLeft, {d}, {{a}}, {{L, Formula::truth(quote(formula_at(d, a)))}}, {},
               ids_);
}

Derivation Builder::truth_right(const Derivation& d, OccId s) {
  return infer(Rule::kTruthRight, {d}, {{s}}, {{R, Formula::truth(quote(formula_at(d, s)))}},
               {}, ids_);
}

Derivation Builder::and_left(const Derivation& d, OccId a, OccId b) {
  Formula f = Formula::conjunction(formula_at(d, a), formula_at(d, b));
  return infer(Rule::kAndLeft, {d}, {{a, b}}, {{L, f}}, {}, ids_);
}

Derivation Builder::and_right(const Derivation& d0, OccId a, const Derivation& d1, OccId b) {
  Formula f = Formula::conjunction(formula_at(d0, a), formula_at(d1, b));
  return infer(Rule::kAndRight, {d0, d1}, {{a}, {b}}, {{R, f}}, {}, ids_);
}

Derivation Builder::all_left(const Derivation& d, OccId copy, OccId inst, const Term& t) {
  return infer(Rule::kAllLeft, {d}, {{copy, inst}}, {{L, formula_at(d, copy)}}, {t}, ids_);
}

Derivation Builder::all_right(const Derivation& d, OccId occ, const std::string& bound,
                              const std::string& eigen) {
  Formula body = substitute(formula_at(d, occ), eigen, Term::variable(bound));
  return infer(Rule::kAllRight, {d}, {{occ}}, {{R, Formula::forall(bound, body)}},
               {Term::variable(eigen)}, ids_);
}

Derivation Builder::cut(const Derivation& d0, OccId right, const Derivation& d1, OccId left) {
  return infer(Rule::kCut, {d0, d1}, {{right}, {left}}, {}, {}, ids_);
}

Derivation Builder::weaken(const Derivation& d, const std::vector<Formula>& theta,
                           const std::vector<Formula>& lambda) {
  // The transformation mints ids past the input only; renumber so they
  // stay apart from everything else built here.
  return renumber(gtcut::weaken(d, theta, lambda).output(), ids_);
}

Generator::Generator(std::uint64_t seed, GeneratorConfig config)
    : rng_(seed), config_(std::move(config)) {}

std::size_t Generator::below(std::size_t n) {
  return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Term Generator::closed_term(std::size_t depth) {
  std::size_t pick = depth == 0 ? below(2) : below(5);
  switch (pick) {
    case 0: return Term::zero();
    case 1: return Term::numeral(Natural(1 + below(3)));
    case 2: return Term::successor(closed_term(depth - 1));
    case 3: return Term::plus(closed_term(depth - 1), closed_term(depth - 1));
    default: return Term::times(closed_term(depth - 1), closed_term(depth - 1));
  }
}

Formula Generator::sentence(std::size_t depth) {
  std::size_t pick = depth == 0 ? below(3) : below(6);
  switch (pick) {
    case 0:
    case 1: return Formula::equal(closed_term(1), closed_term(1));
    case 2:
      if (!config_.allow_truth) return Formula::equal(closed_term(0), closed_term(0));
      return Formula::truth(quote(depth == 0 ? Formula::equal(closed_term(0), closed_term(0))
                                             : sentence(depth - 1)));
    case 3:
      if (config_.allow_truth) return Formula::truth(quote(sentence(depth - 1)));
      [[fallthrough]];
    case 4: return Formula::negation(sentence(depth - 1));
    default: return Formula::conjunction(sentence(depth - 1), sentence(depth - 1));
  }
}

Formula Generator::atom() {
  if (config_.allow_truth && below(3) == 0) {
    return Formula::truth(quote(sentence(below(2))));
  }
  auto term = [&]() {
    if (!config_.variables.empty() && coin()) {
      return Term::variable(config_.variables[below(config_.variables.size())]);
    }
    return closed_term(below(2));
  };
  return Formula::equal(term(), term());
}

Formula Generator::formula(std::size_t depth) {
  if (depth == 0) {
    std::size_t r = below(12);
    if (config_.allow_constants && r == 0) return Formula::top();
    if (config_.allow_constants && r == 1) return Formula::bottom();
    return atom();
  }
  std::size_t pick = below(config_.allow_quantifiers ? 4 : 3);
  switch (pick) {
    case 0: return Formula::negation(formula(depth - 1));
    case 1: return Formula::conjunction(formula(depth - 1), formula(depth - 1));
    case 2: return formula(depth - 1);
    default: {
      Formula body = formula(depth - 1);
      VariableSet fv = free_variables(body);
      VariableSet all;
      collect_variables(body, all);
      std::string x = fresh_variable(all, "x");
      if (!fv.empty() && coin()) {
        auto it = fv.begin();
        std::advance(it, below(fv.size()));
        body = substitute(body, *it, Term::variable(x));
      }
      return Formula::forall(x, body);
    }
  }
}

Derivation Generator::random_steps(Derivation d, std::size_t steps, Builder& b,
                                   std::set<OccId>* tracked) {
  std::set<OccId> local;
  std::set<OccId>& keep = tracked ? *tracked : local;
  auto pick = [&](Side s) -> OccId {
    std::vector<OccId> cands;
    for (const auto& o : d.conclusion().side(s)) {
      if (!keep.contains(o.id)) cands.push_back(o.id);
    }
    return cands.empty() ? 0 : cands[below(cands.size())];
  };
  // Weakening appends, so old occurrences keep their positions.
  auto carry = [&](const Sequent& before, const Derivation& after) {
    std::set<OccId> out;
    for (OccId k : keep) {
      auto where = before.find(k);
      out.insert(after.conclusion().side(where->first)[where->second].id);
    }
    keep = std::move(out);
  };
  for (std::size_t step = 0; step < steps; ++step) {
    const Sequent seq = d.conclusion();
    switch (below(config_.allow_quantifiers ? 8 : 6)) {
      case 0:
        if (OccId a = pick(L)) d = b.neg_right(d, a);
        break;
      case 1:
        if (OccId s = pick(R)) d = b.neg_left(d, s);
        break;
      case 2:
        if (!config_.allow_truth) break;
        if (OccId s = pick(R); s && formula_at(d, s).is_sentence()) d = b.truth_right(d, s);
        break;
      case 3:
        if (!config_.allow_truth) break;
        if (OccId a = pick(L); a && formula_at(d, a).is_sentence()) d = b.truth_left(d, a);
        break;
      case 4: {
        OccId a = pick(L);
        OccId c = pick(L);
        if (a && c && a != c) d = b.and_left(d, a, c);
        break;
      }
      case 5: {
        // Conjoin with the right formula of an identity proof.
        OccId a = pick(R);
        if (!a) break;
        Derivation e = b.identity(atom(), {});
        const Sequent es = e.conclusion();
        OccId eb = es.succ.back().id;
        Derivation d2 = b.weaken(d, formulas(es.ante), without(es.succ, eb));
        Derivation e2 = b.weaken(e, formulas(seq.ante), without(seq.succ, a));
        carry(seq, d2);
        OccId a2 = d2.conclusion().succ[seq.find(a)->second].id;
        OccId b2 = e2.conclusion().succ[es.find(eb)->second].id;
        d = b.and_right(d2, a2, e2, b2);
        break;
      }
      case 6: {
        // Generalize a variable that is free only in this succedent formula.
        OccId s = pick(R);
        if (!s) continue;
        const Formula f = formula_at(d, s);
        bool done = false;
        for (const auto& v : free_variables(f)) {
          bool elsewhere = false;
          for (Side side : {L, R}) {
            for (const auto& o : seq.side(side)) {
              if (o.id != s && free_variables(o.formula).contains(v)) elsewhere = true;
            }
          }
          if (elsewhere) continue;
          VariableSet all;
          collect_variables(f, all);
          d = b.all_right(d, s, fresh_variable(all, "x"), v);
          done = true;
          break;
        }
        if (!done) continue;
        break;
      }
      default: {
        // Universal on the left, over a free variable of the instance or
        // vacuously.
        OccId a = pick(L);
        if (!a) continue;
        const Formula f = formula_at(d, a);
        VariableSet all;
        collect_variables(f, all);
        const std::string x = fresh_variable(all, "x");
        VariableSet fv = free_variables(f);
        Term t = Term::zero();
        Formula body = f;
        if (!fv.empty()) {
          t = Term::variable(*fv.begin());
          body = substitute(f, *fv.begin(), Term::variable(x));
        }
        Derivation w = b.weaken(d, {Formula::forall(x, body)}, {});
        carry(seq, w);
        OccId a2 = w.conclusion().ante[seq.find(a)->second].id;
        d = b.all_left(w, w.conclusion().ante.back().id, a2, t);
        break;
      }
    }
    // Context ids are fresh after every inference; follow the lineage.
    bool moved = false;
    for (OccId k : keep) moved = moved || !d.conclusion().lookup(k);
    if (moved) follow_all(d, keep);
  }
  return d;
}

Derivation Generator::proof() {
  IdAllocator ids;
  Builder b(ids);
  PlainSequent ctx;
  for (std::size_t i = below(3); i > 0; --i) ctx.ante.push_back(atom());
  for (std::size_t i = below(3); i > 0; --i) ctx.succ.push_back(atom());
  Derivation d = b.identity(formula(below(config_.max_formula_depth + 1)), ctx);
  return random_steps(d, below(config_.rule_steps + 1), b);
}

Derivation Generator::proof_with_duplicate(OccId& a, OccId& c) {
  IdAllocator ids;
  Builder b(ids);
  Formula phi = formula(below(config_.max_formula_depth + 1));
  PlainSequent ctx;
  for (std::size_t i = below(2); i > 0; --i) ctx.ante.push_back(atom());
  for (std::size_t i = below(2); i > 0; --i) ctx.succ.push_back(atom());
  const Side s = coin() ? L : R;
  Derivation d = b.identity(phi, ctx);
  Formula dup = phi;
  if (coin()) {
    // A second copy of the active formula, carried by the context.
    (s == L ? ctx.ante : ctx.succ).push_back(phi);
    d = b.identity(phi, ctx);
  } else {
    d = random_steps(d, below(config_.rule_steps + 1), b);
    const auto& side = d.conclusion().side(s);
    if (side.empty()) return proof_with_duplicate(a, c);
    dup = side[below(side.size())].formula;
    d = s == L ? b.weaken(d, {dup}, {}) : b.weaken(d, {}, {dup});
    // Bury the pair under a few more rules.
    std::set<OccId> keep;
    for (const auto& o : d.conclusion().side(s)) {
      if (o.formula == dup) keep.insert(o.id);
    }
    d = random_steps(d, below(3), b, &keep);
  }
  a = c = 0;
  for (const auto& o : d.conclusion().side(s)) {
    if (!(o.formula == dup)) continue;
    if (!a) {
      a = o.id;
    } else {
      c = o.id;
    }
  }
  return d;
}

Derivation Generator::proof_with_cuts(std::size_t min_cuts, std::size_t max_cuts,
                                      std::size_t max_cut_formula) {
  IdAllocator ids;
  Builder b(ids);
  const std::size_t want = min_cuts + below(max_cuts - min_cuts + 1);
  auto small = [&]() {
    for (;;) {
      Formula f = formula(below(max_cut_formula));
      if (logical_complexity(f) <= max_cut_formula && !f.contains_truth()) return f;
      if (logical_complexity(f) <= max_cut_formula && f.is_sentence()) return f;
    }
  };
  // A proof of the cut formula on one side, followed by random rules that
  // leave that occurrence alone.
  auto side_proof = [&](const Formula& phi, Side s, OccId& at) {
    Derivation d = b.identity(phi, {});
    std::set<OccId> keep{last_id(d.conclusion(), s, phi)};
    d = random_steps(d, below(config_.rule_steps), b, &keep);
    at = *keep.begin();
    return d;
  };
  // Matches the contexts by weakening and cuts.
  auto join = [&](const Derivation& p, OccId pr, const Derivation& q, OccId ql) {
    const Sequent ps = p.conclusion();
    const Sequent qs = q.conclusion();
    Derivation pw = b.weaken(p, without(qs.ante, ql), formulas(qs.succ));
    Derivation qw = b.weaken(q, formulas(ps.ante), without(ps.succ, pr));
    return b.cut(pw, pw.conclusion().succ[ps.find(pr)->second].id, qw,
                 qw.conclusion().ante[qs.find(ql)->second].id);
  };
  auto fresh_cut = [&]() {
    Formula phi = small();
    OccId pr = 0;
    OccId ql = 0;
    Derivation p = side_proof(phi, R, pr);
    Derivation q = side_proof(phi, L, ql);
    return join(p, pr, q, ql);
  };
  Derivation d = fresh_cut();
  for (std::size_t k = 1; k < want; ++k) {
    switch (below(3)) {
      case 0: {
        // Reuse a small succedent formula as the next cut formula.
        std::vector<OccId> cands;
        for (const auto& o : d.conclusion().succ) {
          if (logical_complexity(o.formula) <= max_cut_formula) cands.push_back(o.id);
        }
        if (cands.empty()) {
          d = b.weaken(d, {}, {small()});
          cands.push_back(d.conclusion().succ.back().id);
        }
        OccId pr = cands[below(cands.size())];
        OccId ql = 0;
        Derivation q = side_proof(formula_at(d, pr), L, ql);
        d = join(d, pr, q, ql);
        break;
      }
      case 1: {
        std::vector<OccId> cands;
        for (const auto& o : d.conclusion().ante) {
          if (logical_complexity(o.formula) <= max_cut_formula) cands.push_back(o.id);
        }
        if (cands.empty()) {
          d = b.weaken(d, {small()}, {});
          cands.push_back(d.conclusion().ante.back().id);
        }
        OccId ql = cands[below(cands.size())];
        OccId pr = 0;
        Derivation p = side_proof(formula_at(d, ql), R, pr);
        d = join(p, pr, d, ql);
        break;
      }
      default: {
        // Two cut proofs side by side under a conjunction.
        Derivation e = fresh_cut();
        if (d.conclusion().succ.empty() || e.conclusion().succ.empty()) {
          --k;
          continue;
        }
        const Sequent ds = d.conclusion();
        const Sequent es = e.conclusion();
        OccId da = ds.succ.back().id;
        OccId eb = es.succ.back().id;
        Derivation d2 = b.weaken(d, formulas(es.ante), without(es.succ, eb));
        Derivation e2 = b.weaken(e, formulas(ds.ante), without(ds.succ, da));
        d = b.and_right(d2, d2.conclusion().succ[ds.find(da)->second].id, e2,
                        e2.conclusion().succ[es.find(eb)->second].id);
        ++k;
        break;
      }
    }
  }
  return random_steps(d, below(2), b);
}

std::vector<TestUniverse> quantifier_free_universes() {
  auto f = [](std::string_view text) { return parse_formula(text); };
  const Formula lambda = liar_sentence();
  const Formula teller = truth_teller_sentence();
  std::vector<TestUniverse> out;
  out.push_back({"landmarks",
                 {f("(= 0 0)"), f("(not (= 0 (S 0)))"), f("(T (quote (= 0 0)))"),
                  f("(T (quote (T (quote (= 0 0)))))"), lambda, teller}});
  out.push_back({"arithmetic",
                 {f("(= (+ (S 0) (S 0)) (S (S 0)))"), f("(not (= (* (S 0) 0) (S 0)))"),
                  f("(T (quote (= (+ (S 0) (S 0)) 2)))"), f("(not (T (quote (= 0 (S 0)))))"),
                  f("(T (quote (not (= 0 (S 0)))))"), f("(and (= 0 0) (T (quote (= 0 0))))"),
                  f("(not (and (= 0 0) (= 0 (S 0))))"), f("(= (* 2 2) 4)")}});
  out.push_back({"nested",
                 {f("(T (quote (T (quote (T (quote (= 0 0)))))))"),
                  f("(not (T (quote (T (quote (= 0 (S 0)))))))"),
                  f("(T (quote (and (= 0 0) (not (= 0 (S 0))))))"),
                  f("(not (not (T (quote (= 0 0)))))"),
                  Formula::negation(Formula::truth(quote(lambda))),
                  Formula::conjunction(Formula::truth(quote(teller)), f("(= 0 0)")),
                  f("(T (quote (not (T (quote (= (S 0) 0))))))")}});
  for (std::uint64_t seed : {11u, 23u, 47u}) {
    GeneratorConfig config;
    config.allow_quantifiers = false;
    config.variables.clear();
    Generator g(seed, config);
    TestUniverse u{"random-" + std::to_string(seed), {}};
    for (int i = 0; i < 10; ++i) u.seeds.push_back(g.sentence(2));
    out.push_back(std::move(u));
  }
  return out;
}

Formula liar_sentence() {
  return diagonalize(Formula::negation(Formula::truth(Term::variable("v")))).sentence;
}

Formula truth_teller_sentence() {
  return diagonalize(Formula::truth(Term::variable("v"))).sentence;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<GoldenFile> load_golden(const std::filesystem::path& dir) {
  std::vector<GoldenFile> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".gp") continue;
    GoldenFile g;
    g.path = entry.path();
    g.text = slurp(entry.path());
    std::istringstream lines(g.text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("# expect:", 0) == 0) {
        std::istringstream words(line.substr(9));
        std::string w;
        while (words >> w) g.expected.push_back(w);
      } else if (line.rfind("# system:", 0) == 0) {
        std::istringstream words(line.substr(9));
        std::string w;
        words >> w;
        auto s = system_from_name(w);
        if (!s) throw std::runtime_error(g.path.string() + ": unknown system " + w);
        g.system = *s;
      }
    }
    std::sort(g.expected.begin(), g.expected.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const GoldenFile& a, const GoldenFile& b) { return a.path < b.path; });
  return out;
}

}  // namespace gtcut::testing
