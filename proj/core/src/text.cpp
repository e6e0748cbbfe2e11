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

#include "gtcut/text.hpp"

#include <array>
#include <cctype>

#include "gtcut/coding.hpp"

namespace gtcut {

namespace {

constexpr std::array<std::string_view, 24> kReserved = {
    "S",      "T",     "top",    "bot",   "not",   "and",  "forall", "or",
    "exists", "quote", "num",    "sub",   "negdot", "anddot", "alldot",
    "eqdot",  "tdot",  "tr",     "val",   "+",     "*",    "=",      "=>",
    "implies"};

[[noreturn]] void fail_at(std::size_t line, std::size_t column,
                          const std::string& message) {
  throw Error(ErrorCode::kParse, std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message);
}

[[noreturn]] void fail_at(const SExpr& e, const std::string& message) {
  fail_at(e.line, e.column, message);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail_at(line_, column_, "unexpected end of input");
    SExpr e;
    e.line = line_;
    e.column = column_;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      e.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail_at(e, "unclosed parenthesis");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (c == ')') fail_at(line_, column_, "unexpected ')'");
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      e.atom.push_back(text_[pos_]);
      advance();
    }
    return e;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return s.size() == 1 || s[0] != '0';
}

const std::string& head_of(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    fail_at(e, "expected an operator in head position");
  }
  return e.items[0].atom;
}

void expect_args(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1) {
    fail_at(e, "'" + e.items[0].atom + "' expects " + std::to_string(n) +
                   " argument(s)");
  }
}

std::string variable_at(const SExpr& e) {
  if (e.is_list || !is_variable_name(e.atom)) fail_at(e, "expected a variable");
  return e.atom;
}

const std::array<FunctionSymbol, 9> kSymbols = {
    FunctionSymbol::kNum,    FunctionSymbol::kSub,    FunctionSymbol::kNegDot,
    FunctionSymbol::kAndDot, FunctionSymbol::kAllDot, FunctionSymbol::kEqDot,
    FunctionSymbol::kTDot,   FunctionSymbol::kTr,     FunctionSymbol::kVal};

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::kVariable: out += t.name(); return;
    case TermKind::kNumeral: out += t.value().str(); return;
    case TermKind::kSuccessor: out += "(S "; break;
    case TermKind::kPlus: out += "(+ "; break;
    case TermKind::kTimes: out += "(* "; break;
    case TermKind::kFunction:
      out += "(";
      out += symbol_name(t.symbol());
      out += " ";
      break;
  }
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ' ';
    first = false;
    print_term(c, out);
  }
  out += ')';
}

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::kEqual:
      out += "(= ";
      print_term(f.lhs(), out);
      out += ' ';
      print_term(f.rhs(), out);
      out += ')';
      return;
    case FormulaKind::kTruth:
      out += "(T ";
      print_term(f.name(), out);
      out += ')';
      return;
    case FormulaKind::kTop: out += "top"; return;
    case FormulaKind::kBottom: out += "bot"; return;
    case FormulaKind::kNot:
      out += "(not ";
      print_formula(f.operand(), out);
      out += ')';
      return;
    case FormulaKind::kAnd:
      out += "(and ";
      print_formula(f.left(), out);
      out += ' ';
      print_formula(f.right(), out);
      out += ')';
      return;
    case FormulaKind::kForall:
      out += "(forall ";
      out += f.variable();
      out += ' ';
      print_formula(f.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

bool is_variable_name(std::string_view name) {
  if (name.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_' && u != '\'') return false;
  }
  for (auto r : kReserved) {
    if (name == r) return false;
  }
  return true;
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader reader(text);
  std::vector<SExpr> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  Reader reader(text);
  SExpr e = reader.read();
  if (!reader.at_end()) throw Error(ErrorCode::kParse, "trailing input after expression");
  return e;
}

Term term_from_sexpr(const SExpr& e) {
  if (!e.is_list) {
    if (is_decimal(e.atom)) return Term::numeral(Natural(e.atom));
    if (is_variable_name(e.atom)) return Term::variable(e.atom);
    fail_at(e, "expected a term, found '" + e.atom + "'");
  }
  const std::string& head = head_of(e);
  auto arg = [&](std::size_t i) { return term_from_sexpr(e.items[i]); };
  if (head == "S") {
    expect_args(e, 1);
    return Term::successor(arg(1));
  }
  if (head == "+" || head == "*") {
    expect_args(e, 2);
    return head == "+" ? Term::plus(arg(1), arg(2)) : Term::times(arg(1), arg(2));
  }
  if (head == "quote") {
    expect_args(e, 1);
    return quote(formula_from_sexpr(e.items[1]));
  }
  for (auto symbol : kSymbols) {
    if (head == symbol_name(symbol)) {
      expect_args(e, arity(symbol));
      std::vector<Term> args;
      for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(arg(i));
      return Term::function(symbol, std::move(args));
    }
  }
  fail_at(e, "unknown term operator '" + head + "'");
}

Formula formula_from_sexpr(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "top") return Formula::top();
    if (e.atom == "bot") return Formula::bottom();
    fail_at(e, "expected a formula, found '" + e.atom + "'");
  }
  const std::string& head = head_of(e);
  auto sub = [&](std::size_t i) { return formula_from_sexpr(e.items[i]); };
  if (head == "=") {
    expect_args(e, 2);
    return Formula::equal(term_from_sexpr(e.items[1]), term_from_sexpr(e.items[2]));
  }
  if (head == "T") {
    expect_args(e, 1);
    return Formula::truth(term_from_sexpr(e.items[1]));
  }
  if (head == "not") {
    expect_args(e, 1);
    return Formula::negation(sub(1));
  }
  if (head == "and" || head == "or") {
    expect_args(e, 2);
    return head == "and" ? Formula::conjunction(sub(1), sub(2))
                         : Formula::disjunction(sub(1), sub(2));
  }
  if (head == "forall" || head == "exists") {
    expect_args(e, 2);
    std::string v = variable_at(e.items[1]);
    return head == "forall" ? Formula::forall(v, sub(2)) : Formula::exists(v, sub(2));
  }
  fail_at(e, "unknown formula operator '" + head + "'");
}

Term parse_term(std::string_view text) { return term_from_sexpr(read_sexpr(text)); }

Formula parse_formula(std::string_view text) {
  return formula_from_sexpr(read_sexpr(text));
}

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

}  // namespace gtcut
