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

#include "gtcut/coding.hpp"

#include <iterator>
#include <vector>

#include "gtcut/text.hpp"

namespace gtcut {

namespace {

Natural bytes_to_natural(const std::string& s) {
  Natural out;
  boost::multiprecision::import_bits(out, s.begin(), s.end(), 8);
  return out;
}

std::string natural_to_bytes(const Natural& n) {
  std::vector<unsigned char> bytes;
  if (n > 0) boost::multiprecision::export_bits(n, std::back_inserter(bytes), 8);
  return std::string(bytes.begin(), bytes.end());
}

bool looks_like_formula(const SExpr& e) {
  if (!e.is_list) return e.atom == "top" || e.atom == "bot";
  if (e.items.empty() || e.items[0].is_list) return false;
  const std::string& h = e.items[0].atom;
  return h == "=" || h == "T" || h == "not" || h == "and" || h == "forall";
}

[[noreturn]] void not_a_code(const Natural& code, const std::string& why) {
  std::string shown = code.str();
  if (shown.size() > 40) shown = shown.substr(0, 37) + "...";
  throw Error(ErrorCode::kNotACode, shown + " is not a code: " + why);
}

}  // namespace

Code encode(const Term& t) { return Code{bytes_to_natural(print(t))}; }
Code encode(const Formula& f) { return Code{bytes_to_natural(print(f))}; }

Expression decode(const Natural& code) {
  if (code <= 0) not_a_code(code, "empty expression");
  std::string text = natural_to_bytes(code);
  try {
    SExpr e = read_sexpr(text);
    if (looks_like_formula(e)) {
      Formula f = formula_from_sexpr(e);
      if (print(f) == text) return f;
    } else {
      Term t = term_from_sexpr(e);
      if (print(t) == text) return t;
    }
  } catch (const Error&) {
    not_a_code(code, "unreadable");
  }
  not_a_code(code, "not in canonical form");
}

Formula decode_formula(const Natural& code) {
  Expression e = decode(code);
  if (auto* f = std::get_if<Formula>(&e)) return *f;
  not_a_code(code, "names a term, not a formula");
}

Term decode_term(const Natural& code) {
  Expression e = decode(code);
  if (auto* t = std::get_if<Term>(&e)) return *t;
  not_a_code(code, "names a formula, not a term");
}

Term quote(const Formula& f) { return encode(f).numeral(); }

namespace {

Natural eval_function(const Term& t) {
  auto args = t.children();
  auto arg = [&](std::size_t i) { return eval_term(args[i]); };
  switch (t.symbol()) {
    case FunctionSymbol::kNum:
      return encode(Term::numeral(arg(0))).value;
    case FunctionSymbol::kSub: {
      Expression e = decode(arg(0));
      Term v = decode_term(arg(1));
      if (!v.is_variable()) not_a_code(arg(1), "does not name a variable");
      Term by = decode_term(arg(2));
      if (auto* f = std::get_if<Formula>(&e)) {
        return encode(substitute(*f, v.name(), by)).value;
      }
      return encode(substitute(std::get<Term>(e), v.name(), by)).value;
    }
    case FunctionSymbol::kNegDot:
      return encode(Formula::negation(decode_formula(arg(0)))).value;
    case FunctionSymbol::kAndDot:
      return encode(Formula::conjunction(decode_formula(arg(0)),
                                         decode_formula(arg(1)))).value;
    case FunctionSymbol::kAllDot: {
      Formula body = decode_formula(arg(0));
      Term v = decode_term(arg(1));
      if (!v.is_variable()) not_a_code(arg(1), "does not name a variable");
      return encode(Formula::forall(v.name(), body)).value;
    }
    case FunctionSymbol::kEqDot:
      return encode(Formula::equal(decode_term(arg(0)), decode_term(arg(1)))).value;
    case FunctionSymbol::kTDot:
      return encode(Formula::truth(Term::numeral(arg(0)))).value;
    case FunctionSymbol::kTr: {
      Natural n = arg(0);
      Natural m = arg(1);
      if (m > kMaxTruthIteration) {
        throw Error(ErrorCode::kFuelExhausted,
                    "tr iteration count " + m.str() + " exceeds " +
                        std::to_string(kMaxTruthIteration));
      }
      for (unsigned i = 0; i < m.convert_to<unsigned>(); ++i) {
        n = encode(Formula::truth(Term::numeral(n))).value;
      }
      return n;
    }
    case FunctionSymbol::kVal: {
      Term inner = decode_term(arg(0));
      if (!inner.is_closed()) not_a_code(arg(0), "names an open term");
      return eval_term(inner);
    }
  }
  return 0;
}

}  // namespace

Natural eval_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVariable:
      throw Error(ErrorCode::kOpenTerm, "variable " + t.name() + " has no value");
    case TermKind::kNumeral:
      return t.value();
    case TermKind::kSuccessor:
      return eval_term(t.children()[0]) + 1;
    case TermKind::kPlus:
      return eval_term(t.children()[0]) + eval_term(t.children()[1]);
    case TermKind::kTimes:
      return eval_term(t.children()[0]) * eval_term(t.children()[1]);
    case TermKind::kFunction:
      return eval_function(t);
  }
  return 0;
}

Term canonical_term(const Term& t) {
  if (t.is_closed()) return Term::numeral(eval_term(t));
  if (t.is_variable()) return t;
  std::vector<Term> children;
  for (const auto& c : t.children()) children.push_back(canonical_term(c));
  switch (t.kind()) {
    case TermKind::kSuccessor: return Term::successor(children[0]);
    case TermKind::kPlus: return Term::plus(children[0], children[1]);
    case TermKind::kTimes: return Term::times(children[0], children[1]);
    default: return Term::function(t.symbol(), std::move(children));
  }
}

Diagonal diagonalize(const Formula& phi) {
  VariableSet fv = free_variables(phi);
  if (fv.size() != 1) {
    throw Error(ErrorCode::kWrongFreeVariables,
                "diagonalization needs exactly one free variable, found " +
                    std::to_string(fv.size()));
  }
  const std::string v = *fv.begin();
  VariableSet used;
  collect_variables(phi, used);
  const std::string w = fresh_variable(used, "d");
  Term wq = encode(Term::variable(w)).numeral();
  Term w_term = Term::variable(w);
  Term self = Term::function(FunctionSymbol::kSub,
                             {w_term, wq, Term::function(FunctionSymbol::kNum, {w_term})});
  Formula delta = substitute(phi, v, self);
  Term k = encode(delta).numeral();
  Term name = substitute(self, w, k);
  return Diagonal{substitute(delta, w, k), name};
}

}  // namespace gtcut
