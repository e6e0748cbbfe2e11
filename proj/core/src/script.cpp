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

#include "gtcut/script.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "gtcut/kernel.hpp"
#include "gtcut/measures.hpp"
#include "gtcut/text.hpp"

namespace gtcut {
namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorCode::kParse, std::to_string(line) + ":" + std::to_string(column) + ": " + message);
}

// Re-anchors a "1:c: msg" error from a one-line sub-parse.
[[noreturn]] void rethrow_at(const Error& e, std::size_t line, std::size_t offset) {
  static const std::regex pos(R"(^(\d+):(\d+): (.*)$)");
  std::smatch m;
  std::string what = e.what();
  if (std::regex_match(what, m, pos)) {
    fail(line, offset + std::stoul(m[2].str()) - 1, m[3].str());
  }
  fail(line, offset, what);
}

std::string known_rules() {
  std::string out;
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (i) out += ", ";
    out += rule_name(static_cast<Rule>(i));
  }
  return out;
}

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

TauAnnotation parse_tau_item(std::string_view item, const std::string& label, std::size_t line,
                             std::size_t col) {
  static const std::regex re(R"(^([as])(\d+)=(\d+)$)");
  std::string s(item);
  std::smatch m;
  if (!std::regex_match(s, m, re)) fail(line, col, "bad tau annotation '" + s + "', want a0=1 or s2=0");
  TauAnnotation a;
  a.label = label;
  a.side = m[1].str() == "a" ? Side::kAntecedent : Side::kSuccedent;
  a.index = std::stoul(m[2].str());
  a.tau = std::stoul(m[3].str());
  a.line = line;
  return a;
}

void parse_annotation(std::string_view body, std::size_t line, std::size_t offset, Script& out) {
  std::istringstream in{std::string(body)};
  std::string word;
  in >> word;
  if (word != "tau") fail(line, offset, "unknown annotation '" + word + "'");
  std::string label;
  if (!(in >> label)) fail(line, offset, "tau annotation needs a node label");
  std::string item;
  while (in >> item) out.annotations.push_back(parse_tau_item(item, label, line, offset));
}

// -------------------------------------------------------------- elaboration

using Signed = std::pair<Side, Formula>;

std::vector<Signed> signed_list(const PlainSequent& s) {
  std::vector<Signed> out;
  for (const auto& f : s.ante) out.emplace_back(Side::kAntecedent, f);
  for (const auto& f : s.succ) out.emplace_back(Side::kSuccedent, f);
  return out;
}

std::vector<Signed> minus(const std::vector<Signed>& a, const std::vector<Signed>& b) {
  std::vector<bool> used(b.size(), false);
  std::vector<Signed> out;
  for (const auto& x : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b[j].first == x.first && b[j].second == x.second) {
        used[j] = true;
        hit = true;
        break;
      }
    }
    if (!hit) out.push_back(x);
  }
  return out;
}

struct Shape {
  std::vector<Signed> principal;
  std::vector<std::vector<Signed>> active;
};

bool is_successor_zero(const Formula& f) {
  return f.kind() == FormulaKind::kEqual && predecessor(f.lhs()) && f.rhs().is_numeral() &&
         f.rhs().value() == 0;
}

Shape shape_of(Rule rule, const PlainSequent& conclusion, const std::vector<PlainSequent>& premises) {
  const Side L = Side::kAntecedent;
  const Side R = Side::kSuccedent;
  Shape s;
  switch (rule) {
    case Rule::kRefMinus: {
      std::optional<Formula> pick;
      // T-free atoms first, then other atoms, then anything shared.
      for (int pass = 0; pass < 3 && !pick; ++pass) {
        for (const auto& f : conclusion.ante) {
          if (pass < 2 && !f.is_atomic()) continue;
          if (pass == 0 && f.contains_truth()) continue;
          if (std::find(conclusion.succ.begin(), conclusion.succ.end(), f) != conclusion.succ.end()) {
            pick = f;
            break;
          }
        }
      }
      if (pick) s.principal = {{L, *pick}, {R, *pick}};
      return s;
    }
    case Rule::kTopAxiom:
      if (std::find(conclusion.succ.begin(), conclusion.succ.end(), Formula::top()) != conclusion.succ.end()) {
        s.principal = {{R, Formula::top()}};
      }
      return s;
    case Rule::kBotAxiom:
      if (std::find(conclusion.ante.begin(), conclusion.ante.end(), Formula::bottom()) != conclusion.ante.end()) {
        s.principal = {{L, Formula::bottom()}};
      }
      return s;
    case Rule::kQg1:
      for (const auto& f : conclusion.ante) {
        if (is_successor_zero(f)) {
          s.principal = {{L, f}};
          break;
        }
      }
      return s;
    default:
      break;
  }
  const auto c = signed_list(conclusion);
  if (rule == Rule::kAllLeft && premises.size() == 1) {
    auto extra = minus(signed_list(premises[0]), c);
    if (extra.size() == 1 && extra[0].first == L) {
      const Formula& inst = extra[0].second;
      for (auto it = conclusion.ante.rbegin(); it != conclusion.ante.rend(); ++it) {
        if (it->kind() != FormulaKind::kForall) continue;
        if (match_instance(it->body(), it->variable(), inst, Term::variable(it->variable()))) {
          s.principal = {{L, *it}};
          s.active = {{{L, *it}, {L, inst}}};
          return s;
        }
      }
      // No universal formula matches; keep the last one so the kernel
      // reports the mismatch.
      for (auto it = conclusion.ante.rbegin(); it != conclusion.ante.rend(); ++it) {
        if (it->kind() != FormulaKind::kForall) continue;
        s.principal = {{L, *it}};
        s.active = {{{L, *it}, {L, inst}}};
        return s;
      }
    }
  }
  s.principal = premises.empty() ? c : minus(c, signed_list(premises[0]));
  for (const auto& p : premises) s.active.push_back(minus(signed_list(p), c));
  return s;
}

// Marks the last unmarked occurrence of each listed formula.
std::vector<OccId> mark_last(const Sequent& seq, const std::vector<Signed>& want,
                             std::set<OccId>& marked) {
  std::vector<OccId> out;
  for (const auto& [side, f] : want) {
    const auto& v = seq.side(side);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (!marked.contains(it->id) && it->formula == f) {
        marked.insert(it->id);
        out.push_back(it->id);
        break;
      }
    }
  }
  return out;
}

Derivation build(const ScriptNode& n, std::vector<Derivation> premises, IdAllocator& ids) {
  std::vector<PlainSequent> plain_premises;
  for (const auto& p : premises) plain_premises.push_back(plain(p.conclusion()));
  Shape shape = shape_of(n.rule, n.sequent, plain_premises);

  DerivationNode node;
  node.rule = n.rule;
  node.conclusion = make_sequent(n.sequent, ids);
  std::set<OccId> marked;
  node.principal = mark_last(node.conclusion, shape.principal, marked);

  std::vector<std::set<OccId>> taken(premises.size());
  for (std::size_t i = 0; i < premises.size(); ++i) {
    auto want = i < shape.active.size() ? shape.active[i] : std::vector<Signed>{};
    node.active.push_back(mark_last(premises[i].conclusion(), want, taken[i]));
  }
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : node.conclusion.side(s)) {
      if (marked.contains(o.id)) continue;
      std::vector<OccId> anc;
      for (std::size_t i = 0; i < premises.size(); ++i) {
        for (const auto& q : premises[i].conclusion().side(s)) {
          if (!taken[i].contains(q.id) && q.formula == o.formula) {
            taken[i].insert(q.id);
            anc.push_back(q.id);
            break;
          }
        }
      }
      if (anc.size() == premises.size()) node.lineage[o.id] = std::move(anc);
    }
  }
  node.premises = std::move(premises);
  return make_node(std::move(node));
}

}  // namespace

Script parse_script(std::string_view text) {
  Script out;
  std::set<std::string> labels;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = trim(raw);
    const std::size_t indent = raw.find_first_not_of(" \t");
    if (line.empty()) continue;
    if (line.starts_with("#!")) {
      parse_annotation(line.substr(2), line_no, indent + 3, out);
      continue;
    }
    if (line.front() == '#') continue;
    // Drop a trailing comment outside of formulas.
    if (auto h = line.find('#'); h != std::string_view::npos) line = trim(line.substr(0, h));

    ScriptNode node;
    node.line = line_no;
    std::size_t i = 0;
    while (i < line.size() && label_char(line[i])) ++i;
    if (i == 0 || i >= line.size() || line[i] != ':') {
      fail(line_no, indent + 1 + i, "expected '<label>:' at the start of a node line");
    }
    node.label = std::string(line.substr(0, i));
    if (!labels.insert(node.label).second) fail(line_no, indent + 1, "label '" + node.label + "' is defined twice");
    ++i;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t r = i;
    while (r < line.size() && label_char(line[r])) ++r;
    std::string tag(line.substr(i, r - i));
    auto rule = rule_from_name(tag);
    if (!rule) {
      fail(line_no, indent + 1 + i, "unknown rule '" + tag + "'; known rules: " + known_rules());
    }
    node.rule = *rule;
    i = r;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size() && line[i] == '[') {
      std::size_t close = line.find(']', i);
      if (close == std::string_view::npos) fail(line_no, indent + 1 + i, "unclosed premise list");
      std::string list(line.substr(i + 1, close - i - 1));
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream in(list);
      std::string p;
      while (in >> p) {
        if (!labels.contains(p) || p == node.label) {
          fail(line_no, indent + 1 + i, "premise '" + p + "' is not defined on an earlier line");
        }
        node.premises.push_back(p);
      }
      i = close + 1;
    }
    try {
      node.sequent = parse_sequent(line.substr(i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParse) throw;
      rethrow_at(e, line_no, indent + 1 + i);
    }
    out.nodes.push_back(std::move(node));
  }
  if (out.nodes.empty()) fail(line_no, 1, "script has no nodes");
  return out;
}

Elaborated elaborate(const Script& script) {
  Elaborated out{Derivation(nullptr), {}};
  IdAllocator ids(1);
  std::set<std::string> used;
  for (const auto& n : script.nodes) {
    std::vector<Derivation> premises;
    for (const auto& p : n.premises) {
      if (!used.insert(p).second) fail(n.line, 1, "node '" + p + "' is used as a premise twice");
      premises.push_back(out.nodes.at(p));
    }
    out.nodes.emplace(n.label, build(n, std::move(premises), ids));
  }
  std::vector<std::string> roots;
  for (const auto& n : script.nodes) {
    if (!used.contains(n.label)) roots.push_back(n.label);
  }
  if (roots.size() != 1) {
    std::string list;
    for (const auto& r : roots) list += (list.empty() ? "" : ", ") + r;
    fail(script.nodes.back().line, 1, "a script needs exactly one root, found: " + list);
  }
  out.root = out.nodes.at(roots.front());
  for (const auto& a : script.annotations) {
    if (!out.nodes.contains(a.label)) fail(a.line, 1, "tau annotation for unknown node '" + a.label + "'");
  }
  return out;
}

Derivation read_proof(std::string_view text) { return elaborate(parse_script(text)).root; }

namespace {

void print_node(const Derivation& d, std::size_t& next, std::ostringstream& out,
                const Measures* m) {
  std::vector<std::size_t> labels;
  for (const auto& p : d.premises()) {
    print_node(p, next, out, m);
    labels.push_back(next - 1);
  }
  const std::size_t me = next++;
  out << me << ": " << rule_name(d.rule()) << " [";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  out << "] " << print(d.conclusion()) << "\n";
  if (m) {
    out << "#! tau " << me;
    for (std::size_t i = 0; i < d.conclusion().ante.size(); ++i) {
      out << " a" << i << "=" << m->tau_of(d.conclusion().ante[i].id);
    }
    for (std::size_t i = 0; i < d.conclusion().succ.size(); ++i) {
      out << " s" << i << "=" << m->tau_of(d.conclusion().succ[i].id);
    }
    out << "\n";
  }
}

}  // namespace

std::string print_script(const Derivation& d, bool annotate) {
  std::optional<Measures> m;
  if (annotate) m = compute_measures(d);
  std::ostringstream out;
  std::size_t next = 1;
  print_node(d, next, out, m ? &*m : nullptr);
  return out.str();
}

std::vector<Formula> parse_sentence_file(std::string_view text) {
  std::vector<Formula> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParse) throw;
      rethrow_at(e, line_no, raw.find_first_not_of(" \t") + 1);
    }
  }
  return out;
}

}  // namespace gtcut
