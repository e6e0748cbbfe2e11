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

#include "gtcut/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gtcut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCaptureViolation: return "CAPTURE_VIOLATION";
    case ErrorCode::kOpenTerm: return "OPEN_TERM";
    case ErrorCode::kNotACode: return "NOT_A_CODE";
    case ErrorCode::kBadArity: return "BAD_ARITY";
    case ErrorCode::kWrongFreeVariables: return "WRONG_FREE_VARIABLES";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kEigenvariableCollision: return "EIGENVARIABLE_COLLISION";
    case ErrorCode::kVariableCollision: return "VARIABLE_COLLISION";
    case ErrorCode::kTargetMismatch: return "TARGET_MISMATCH";
    case ErrorCode::kOccurrenceMismatch: return "OCCURRENCE_MISMATCH";
    case ErrorCode::kUnknownOccurrence: return "UNKNOWN_OCCURRENCE";
    case ErrorCode::kInvalidDerivation: return "INVALID_DERIVATION";
    case ErrorCode::kBrokenLineage: return "BROKEN_LINEAGE";
    case ErrorCode::kContextMismatch: return "CONTEXT_MISMATCH";
    case ErrorCode::kRankViolation: return "RANK_VIOLATION";
    case ErrorCode::kUnsupportedSystem: return "UNSUPPORTED_SYSTEM";
    case ErrorCode::kUniverseTooLarge: return "UNIVERSE_TOO_LARGE";
    case ErrorCode::kCoverageGap: return "COVERAGE_GAP";
    case ErrorCode::kCertificateFailure: return "CERTIFICATE_FAILURE";
    case ErrorCode::kFuelExhausted: return "FUEL_EXHAUSTED";
  }
  return "UNKNOWN";
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------- terms

struct Term::Node {
  TermKind kind;
  FunctionSymbol symbol = FunctionSymbol::kNum;
  std::string name;
  Natural value;
  std::vector<Term> children;
  std::size_t hash = 0;
  bool closed = true;
  bool arithmetic = true;
};

std::size_t arity(FunctionSymbol symbol) {
  switch (symbol) {
    case FunctionSymbol::kNum:
    case FunctionSymbol::kNegDot:
    case FunctionSymbol::kTDot:
    case FunctionSymbol::kVal:
      return 1;
    case FunctionSymbol::kSub:
      return 3;
    case FunctionSymbol::kAndDot:
    case FunctionSymbol::kAllDot:
    case FunctionSymbol::kEqDot:
    case FunctionSymbol::kTr:
      return 2;
  }
  return 0;
}

std::string_view symbol_name(FunctionSymbol symbol) {
  switch (symbol) {
    case FunctionSymbol::kNum: return "num";
    case FunctionSymbol::kSub: return "sub";
    case FunctionSymbol::kNegDot: return "negdot";
    case FunctionSymbol::kAndDot: return "anddot";
    case FunctionSymbol::kAllDot: return "alldot";
    case FunctionSymbol::kEqDot: return "eqdot";
    case FunctionSymbol::kTDot: return "tdot";
    case FunctionSymbol::kTr: return "tr";
    case FunctionSymbol::kVal: return "val";
  }
  return "?";
}


Term Term::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kVariable;
  node->hash = mix(1, std::hash<std::string>{}(name));
  node->name = std::move(name);
  node->closed = false;
  return Term(std::move(node));
}

Term Term::zero() { return numeral(0); }

Term Term::numeral(const Natural& n) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kNumeral;
  node->value = n;
  node->hash = mix(2, std::hash<std::string>{}(n.str()));
  return Term(std::move(node));
}

Term Term::successor(const Term& t) {
  if (t.is_numeral()) return numeral(t.value() + 1);
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kSuccessor;
  node->children = {t};
  node->hash = mix(3, t.hash());
  node->closed = t.is_closed();
  node->arithmetic = t.is_arithmetic();
  return Term(std::move(node));
}

namespace {

template <typename NodeT>
void finish_compound(NodeT& node, std::size_t tag) {
  std::size_t h = tag;
  for (const auto& c : node.children) {
    h = mix(h, c.hash());
    node.closed = node.closed && c.is_closed();
    node.arithmetic = node.arithmetic && c.is_arithmetic();
  }
  node.hash = h;
}

}  // namespace

Term Term::plus(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kPlus;
  node->children = {a, b};
  finish_compound(*node, 4);
  return Term(std::move(node));
}

Term Term::times(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kTimes;
  node->children = {a, b};
  finish_compound(*node, 5);
  return Term(std::move(node));
}

Term Term::function(FunctionSymbol symbol, std::vector<Term> args) {
  if (args.size() != arity(symbol)) {
    throw Error(ErrorCode::kBadArity,
                std::string(symbol_name(symbol)) + " expects " +
                    std::to_string(arity(symbol)) + " arguments");
  }
  auto node = std::make_shared<Node>();
  node->kind = TermKind::kFunction;
  node->symbol = symbol;
  node->children = std::move(args);
  finish_compound(*node, 16 + static_cast<std::size_t>(symbol));
  node->arithmetic = false;
  return Term(std::move(node));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Natural& Term::value() const { return node_->value; }
FunctionSymbol Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::children() const { return node_->children; }
bool Term::is_closed() const { return node_->closed; }
bool Term::is_arithmetic() const { return node_->arithmetic; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::kVariable: return a.name() == b.name();
    case TermKind::kNumeral: return a.value() == b.value();
    case TermKind::kFunction:
      if (a.symbol() != b.symbol()) return false;
      break;
    default:
      break;
  }
  return std::ranges::equal(a.children(), b.children());
}

int compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case TermKind::kVariable:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case TermKind::kNumeral:
      return a.value() < b.value() ? -1 : (a.value() == b.value() ? 0 : 1);
    case TermKind::kFunction:
      if (a.symbol() != b.symbol()) return a.symbol() < b.symbol() ? -1 : 1;
      break;
    default:
      break;
  }
  auto ca = a.children();
  auto cb = b.children();
  for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

// ------------------------------------------------------------- formulas

struct Formula::Node {
  FormulaKind kind;
  std::vector<Term> terms;
  std::vector<Formula> subformulas;
  std::string variable;
  std::size_t hash = 0;
  bool contains_truth = false;
  bool sentence = true;
};

namespace {

std::shared_ptr<Formula::Node> make_formula_node(FormulaKind kind) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  return node;
}

}  // namespace

Formula Formula::equal(const Term& lhs, const Term& rhs) {
  auto node = make_formula_node(FormulaKind::kEqual);
  node->terms = {lhs, rhs};
  node->hash = mix(mix(101, lhs.hash()), rhs.hash());
  node->sentence = lhs.is_closed() && rhs.is_closed();
  return Formula(std::move(node));
}

Formula Formula::truth(const Term& name) {
  auto node = make_formula_node(FormulaKind::kTruth);
  node->terms = {name};
  node->hash = mix(102, name.hash());
  node->contains_truth = true;
  node->sentence = name.is_closed();
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula kTop = [] {
    auto node = make_formula_node(FormulaKind::kTop);
    node->hash = 103;
    return Formula(std::move(node));
  }();
  return kTop;
}

Formula Formula::bottom() {
  static const Formula kBottom = [] {
    auto node = make_formula_node(FormulaKind::kBottom);
    node->hash = 104;
    return Formula(std::move(node));
  }();
  return kBottom;
}

Formula Formula::negation(const Formula& operand) {
  auto node = make_formula_node(FormulaKind::kNot);
  node->subformulas = {operand};
  node->hash = mix(105, operand.hash());
  node->contains_truth = operand.contains_truth();
  node->sentence = operand.is_sentence();
  return Formula(std::move(node));
}

Formula Formula::conjunction(const Formula& left, const Formula& right) {
  auto node = make_formula_node(FormulaKind::kAnd);
  node->subformulas = {left, right};
  node->hash = mix(mix(106, left.hash()), right.hash());
  node->contains_truth = left.contains_truth() || right.contains_truth();
  node->sentence = left.is_sentence() && right.is_sentence();
  return Formula(std::move(node));
}

Formula Formula::forall(const std::string& variable, const Formula& body) {
  auto node = make_formula_node(FormulaKind::kForall);
  node->subformulas = {body};
  node->variable = variable;
  node->hash = mix(mix(107, std::hash<std::string>{}(variable)), body.hash());
  node->contains_truth = body.contains_truth();
  if (body.is_sentence()) {
    node->sentence = true;
  } else {
    auto fv = free_variables(body);
    fv.erase(variable);
    node->sentence = fv.empty();
  }
  return Formula(std::move(node));
}

Formula Formula::disjunction(const Formula& left, const Formula& right) {
  return negation(conjunction(negation(left), negation(right)));
}

Formula Formula::exists(const std::string& variable, const Formula& body) {
  return negation(forall(variable, negation(body)));
}

FormulaKind Formula::kind() const { return node_->kind; }
const Term& Formula::lhs() const { return node_->terms.at(0); }
const Term& Formula::rhs() const { return node_->terms.at(1); }
const Term& Formula::name() const { return node_->terms.at(0); }
const Formula& Formula::operand() const { return node_->subformulas.at(0); }
const Formula& Formula::left() const { return node_->subformulas.at(0); }
const Formula& Formula::right() const { return node_->subformulas.at(1); }
const std::string& Formula::variable() const { return node_->variable; }
const Formula& Formula::body() const { return node_->subformulas.at(0); }

bool Formula::is_atomic() const {
  return kind() == FormulaKind::kEqual || kind() == FormulaKind::kTruth;
}
bool Formula::contains_truth() const { return node_->contains_truth; }
bool Formula::is_sentence() const { return node_->sentence; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.kind() != b.kind()) return false;
  return a.node_->variable == b.node_->variable &&
         std::ranges::equal(a.node_->terms, b.node_->terms) &&
         std::ranges::equal(a.node_->subformulas, b.node_->subformulas);
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.node_->variable.compare(b.node_->variable); c != 0) {
    return c < 0 ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.node_->terms.size(); ++i) {
    if (int c = compare(a.node_->terms[i], b.node_->terms[i]); c != 0) return c;
  }
  for (std::size_t i = 0; i < a.node_->subformulas.size(); ++i) {
    if (int c = compare(a.node_->subformulas[i], b.node_->subformulas[i]);
        c != 0) {
      return c;
    }
  }
  return 0;
}

// ------------------------------------------------------------ variables

void collect_variables(const Term& t, VariableSet& out) {
  if (t.is_closed()) return;
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& c : t.children()) collect_variables(c, out);
}

VariableSet free_variables(const Term& t) {
  VariableSet out;
  collect_variables(t, out);
  return out;
}

namespace {

void collect_free(const Formula& f, VariableSet& bound, VariableSet& out) {
  if (f.is_sentence()) return;
  switch (f.kind()) {
    case FormulaKind::kEqual:
    case FormulaKind::kTruth: {
      VariableSet vs;
      collect_variables(f.lhs(), vs);
      if (f.kind() == FormulaKind::kEqual) collect_variables(f.rhs(), vs);
      for (const auto& v : vs) {
        if (!bound.contains(v)) out.insert(v);
      }
      break;
    }
    case FormulaKind::kTop:
    case FormulaKind::kBottom:
      break;
    case FormulaKind::kNot:
      collect_free(f.operand(), bound, out);
      break;
    case FormulaKind::kAnd:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case FormulaKind::kForall: {
      bool inserted = bound.insert(f.variable()).second;
      collect_free(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      break;
    }
  }
}

}  // namespace

VariableSet free_variables(const Formula& f) {
  VariableSet bound, out;
  collect_free(f, bound, out);
  return out;
}

VariableSet bound_variables(const Formula& f) {
  VariableSet out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::kNot: walk(g.operand()); break;
      case FormulaKind::kAnd: walk(g.left()); walk(g.right()); break;
      case FormulaKind::kForall:
        out.insert(g.variable());
        walk(g.body());
        break;
      default: break;
    }
  };
  walk(f);
  return out;
}

void collect_variables(const Formula& f, VariableSet& out) {
  switch (f.kind()) {
    case FormulaKind::kEqual:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      break;
    case FormulaKind::kTruth: collect_variables(f.name(), out); break;
    case FormulaKind::kTop:
    case FormulaKind::kBottom: break;
    case FormulaKind::kNot: collect_variables(f.operand(), out); break;
    case FormulaKind::kAnd:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
    case FormulaKind::kForall:
      out.insert(f.variable());
      collect_variables(f.body(), out);
      break;
  }
}

std::size_t logical_complexity(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kEqual:
    case FormulaKind::kTruth:
    case FormulaKind::kTop:
    case FormulaKind::kBottom:
      return 0;
    case FormulaKind::kNot: return logical_complexity(f.operand()) + 1;
    case FormulaKind::kForall: return logical_complexity(f.body()) + 1;
    case FormulaKind::kAnd:
      return std::max(logical_complexity(f.left()),
                      logical_complexity(f.right())) + 1;
  }
  return 0;
}

// --------------------------------------------------------- substitution

bool occurs(const std::string& variable, const Term& t) {
  if (t.is_closed()) return false;
  if (t.is_variable()) return t.name() == variable;
  return std::ranges::any_of(t.children(), [&](const Term& c) {
    return occurs(variable, c);
  });
}

namespace {

Term rebuild(const Term& t, std::vector<Term> children) {
  switch (t.kind()) {
    case TermKind::kSuccessor: return Term::successor(children[0]);
    case TermKind::kPlus: return Term::plus(children[0], children[1]);
    case TermKind::kTimes: return Term::times(children[0], children[1]);
    case TermKind::kFunction: return Term::function(t.symbol(), std::move(children));
    default: return t;
  }
}

}  // namespace

Term substitute(const Term& t, const std::string& variable, const Term& by) {
  if (!occurs(variable, t)) return t;
  if (t.is_variable()) return by;
  std::vector<Term> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(substitute(c, variable, by));
  return rebuild(t, std::move(children));
}

namespace {

Formula substitute_in(const Formula& f, const std::string& variable,
                      const Term& by, const VariableSet& by_vars) {
  if (f.is_sentence()) return f;
  switch (f.kind()) {
    case FormulaKind::kEqual:
      return Formula::equal(substitute(f.lhs(), variable, by),
                            substitute(f.rhs(), variable, by));
    case FormulaKind::kTruth:
      return Formula::truth(substitute(f.name(), variable, by));
    case FormulaKind::kTop:
    case FormulaKind::kBottom:
      return f;
    case FormulaKind::kNot:
      return Formula::negation(substitute_in(f.operand(), variable, by, by_vars));
    case FormulaKind::kAnd:
      return Formula::conjunction(substitute_in(f.left(), variable, by, by_vars),
                                  substitute_in(f.right(), variable, by, by_vars));
    case FormulaKind::kForall: {
      if (f.variable() == variable) return f;
      if (!free_variables(f.body()).contains(variable)) return f;
      if (by_vars.contains(f.variable())) {
        throw Error(ErrorCode::kCaptureViolation,
                    "substituting for " + variable + " would capture " +
                        f.variable());
      }
      return Formula::forall(f.variable(),
                             substitute_in(f.body(), variable, by, by_vars));
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& variable,
                   const Term& by) {
  return substitute_in(f, variable, by, free_variables(by));
}

namespace {

bool match_term(const Term& pattern, const std::string& variable,
                const Term& instance, std::optional<Term>& binding) {
  if (!occurs(variable, pattern)) return pattern == instance;
  if (pattern.is_variable()) {
    if (binding) return *binding == instance;
    binding = instance;
    return true;
  }
  // A successor pattern may meet a compact numeral instance.
  if (pattern.kind() == TermKind::kSuccessor && instance.is_numeral()) {
    if (instance.value() == 0) return false;
    return match_term(pattern.children()[0], variable,
                      Term::numeral(instance.value() - 1), binding);
  }
  if (pattern.kind() != instance.kind()) return false;
  if (pattern.kind() == TermKind::kFunction &&
      pattern.symbol() != instance.symbol()) {
    return false;
  }
  auto pc = pattern.children();
  auto ic = instance.children();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (!match_term(pc[i], variable, ic[i], binding)) return false;
  }
  return true;
}

bool match_formula(const Formula& pattern, const std::string& variable,
                   const Formula& instance, std::optional<Term>& binding) {
  if (pattern.kind() != instance.kind()) return false;
  switch (pattern.kind()) {
    case FormulaKind::kEqual:
      return match_term(pattern.lhs(), variable, instance.lhs(), binding) &&
             match_term(pattern.rhs(), variable, instance.rhs(), binding);
    case FormulaKind::kTruth:
      return match_term(pattern.name(), variable, instance.name(), binding);
    case FormulaKind::kTop:
    case FormulaKind::kBottom:
      return true;
    case FormulaKind::kNot:
      return match_formula(pattern.operand(), variable, instance.operand(), binding);
    case FormulaKind::kAnd:
      return match_formula(pattern.left(), variable, instance.left(), binding) &&
             match_formula(pattern.right(), variable, instance.right(), binding);
    case FormulaKind::kForall:
      if (pattern.variable() != instance.variable()) return false;
      if (pattern.variable() == variable) return pattern == instance;
      return match_formula(pattern.body(), variable, instance.body(), binding);
  }
  return false;
}

}  // namespace

std::optional<Term> match_instance(const Formula& pattern,
                                   const std::string& variable,
                                   const Formula& instance,
                                   const Term& fallback) {
  std::optional<Term> binding;
  if (!match_formula(pattern, variable, instance, binding)) return std::nullopt;
  Term s = binding.value_or(fallback);
  try {
    if (substitute(pattern, variable, s) == instance) return s;
  } catch (const Error&) {
  }
  return std::nullopt;
}

namespace {

bool replaces_term(const Term& a, const Term& b, const Term& s, const Term& t) {
  if (a == b) return true;
  if (a == s && b == t) return true;
  // Numerals stand for iterated successors of 0.
  const bool sa = a.kind() == TermKind::kSuccessor || (a.is_numeral() && a.value() > 0);
  const bool sb = b.kind() == TermKind::kSuccessor || (b.is_numeral() && b.value() > 0);
  if (sa && sb && (a.kind() != b.kind() || a.is_numeral())) {
    auto down = [](const Term& x) {
      return x.is_numeral() ? Term::numeral(x.value() - 1) : x.children()[0];
    };
    return replaces_term(down(a), down(b), s, t);
  }
  if (a.kind() != b.kind()) return false;
  if (a.kind() == TermKind::kVariable || a.kind() == TermKind::kNumeral) return false;
  if (a.kind() == TermKind::kFunction && a.symbol() != b.symbol()) return false;
  auto ca = a.children();
  auto cb = b.children();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!replaces_term(ca[i], cb[i], s, t)) return false;
  }
  return true;
}

}  // namespace

bool replaces(const Formula& a, const Formula& b, const Term& s, const Term& t) {
  if (a.kind() != FormulaKind::kEqual || b.kind() != FormulaKind::kEqual) {
    return false;
  }
  return replaces_term(a.lhs(), b.lhs(), s, t) &&
         replaces_term(a.rhs(), b.rhs(), s, t);
}

std::string fresh_variable(const VariableSet& avoid, std::string_view stem) {
  for (std::size_t i = 0;; ++i) {
    std::string candidate = std::string(stem) + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

}  // namespace gtcut
