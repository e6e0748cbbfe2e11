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

#include "gtcut/derivation.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "gtcut/text.hpp"

namespace gtcut {

std::string_view side_name(Side side) {
  return side == Side::kAntecedent ? "ante" : "succ";
}

std::optional<std::pair<Side, std::size_t>> Sequent::find(OccId id) const {
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    const auto& v = side(s);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].id == id) return std::make_pair(s, i);
    }
  }
  return std::nullopt;
}

const Occurrence* Sequent::lookup(OccId id) const {
  auto where = find(id);
  if (!where) return nullptr;
  return &side(where->first)[where->second];
}

PlainSequent plain(const Sequent& s) {
  PlainSequent out;
  for (const auto& o : s.ante) out.ante.push_back(o.formula);
  for (const auto& o : s.succ) out.succ.push_back(o.formula);
  return out;
}

bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Formula> sa = a, sb = b;
  std::sort(sa.begin(), sa.end(), FormulaLess{});
  std::sort(sb.begin(), sb.end(), FormulaLess{});
  return std::equal(sa.begin(), sa.end(), sb.begin());
}

bool same_sequent(const PlainSequent& a, const PlainSequent& b) {
  return same_multiset(a.ante, b.ante) && same_multiset(a.succ, b.succ);
}

bool same_sequent(const Sequent& a, const Sequent& b) {
  return same_sequent(plain(a), plain(b));
}

namespace {

void print_list(const std::vector<Formula>& fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += print(fs[i]);
  }
}

}  // namespace

std::string print(const PlainSequent& s) {
  std::string out;
  print_list(s.ante, out);
  out += s.ante.empty() ? "=>" : " =>";
  if (!s.succ.empty()) out += ' ';
  print_list(s.succ, out);
  return out;
}

std::string print(const Sequent& s) { return print(plain(s)); }

namespace {

std::vector<Formula> parse_formula_list(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::vector<Formula> out;
  for (const auto& e : read_sexprs(cleaned)) out.push_back(formula_from_sexpr(e));
  return out;
}

}  // namespace

PlainSequent parse_sequent(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text[i] == '=' && text[i + 1] == '>') {
      PlainSequent s;
      s.ante = parse_formula_list(text.substr(0, i));
      s.succ = parse_formula_list(text.substr(i + 2));
      return s;
    }
  }
  throw Error(ErrorCode::kParse, "sequent needs '=>'");
}

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t premises;
};

constexpr std::array<RuleInfo, kRuleCount> kRules = {{
    {Rule::kRefMinus, "ref", 0},    {Rule::kTopAxiom, "top", 0},
    {Rule::kBotAxiom, "bot", 0},    {Rule::kCut, "cut", 2},
    {Rule::kTruthLeft, "tl", 1},    {Rule::kTruthRight, "tr", 1},
    {Rule::kNegLeft, "negl", 1},    {Rule::kNegRight, "negr", 1},
    {Rule::kAndLeft, "andl", 1},    {Rule::kAndRight, "andr", 2},
    {Rule::kAllLeft, "alll", 1},    {Rule::kAllRight, "allr", 1},
    {Rule::kEq1, "eq1", 1},         {Rule::kEq2, "eq2", 1},
    {Rule::kQg1, "qg1", 0},         {Rule::kQg2, "qg2", 1},
    {Rule::kQg3, "qg3", 2},         {Rule::kQg4, "qg4", 1},
    {Rule::kQg5, "qg5", 1},         {Rule::kQg6, "qg6", 1},
    {Rule::kQg7, "qg7", 1},         {Rule::kCompAnd, "comp", 2},
}};

}  // namespace

std::string_view rule_name(Rule rule) {
  return kRules[static_cast<std::size_t>(rule)].name;
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& info : kRules) {
    if (info.name == name) return info.rule;
  }
  return std::nullopt;
}

bool is_axiom(Rule rule) { return premise_count(rule) == 0; }

std::size_t premise_count(Rule rule) {
  return kRules[static_cast<std::size_t>(rule)].premises;
}

IdAllocator IdAllocator::after(const Derivation& d) {
  return IdAllocator(max_occurrence_id(d) + 1);
}

Sequent make_sequent(const PlainSequent& s, IdAllocator& ids) {
  Sequent out;
  for (const auto& f : s.ante) out.ante.push_back({f, ids.fresh()});
  for (const auto& f : s.succ) out.succ.push_back({f, ids.fresh()});
  return out;
}

Derivation make_axiom(Rule rule, Sequent conclusion, std::vector<OccId> principal,
                      std::vector<Term> params) {
  DerivationNode node{rule, std::move(conclusion), {}, std::move(principal), {},
                      std::move(params), {}};
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : node.conclusion.side(s)) {
      if (std::find(node.principal.begin(), node.principal.end(), o.id) ==
          node.principal.end()) {
        node.lineage[o.id] = {};
      }
    }
  }
  return Derivation(std::make_shared<const DerivationNode>(std::move(node)));
}

Derivation infer(Rule rule, std::vector<Derivation> premises,
                 std::vector<std::vector<OccId>> active,
                 std::vector<NewFormula> principal, std::vector<Term> params,
                 IdAllocator& ids) {
  active.resize(premises.size());
  DerivationNode node;
  node.rule = rule;
  node.params = std::move(params);

  // Context of each premise, per side.
  std::vector<std::array<std::vector<Occurrence>, 2>> context(premises.size());
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const Sequent& c = premises[i].conclusion();
    for (OccId a : active[i]) {
      if (!c.lookup(a)) {
        throw Error(ErrorCode::kUnknownOccurrence,
                    "active occurrence " + std::to_string(a) +
                        " is not in premise " + std::to_string(i));
      }
    }
    for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : c.side(s)) {
        if (std::find(active[i].begin(), active[i].end(), o.id) == active[i].end()) {
          context[i][static_cast<std::size_t>(s)].push_back(o);
        }
      }
    }
  }

  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    const std::size_t si = static_cast<std::size_t>(s);
    if (premises.empty()) break;
    std::vector<std::vector<bool>> used(premises.size());
    for (std::size_t i = 1; i < premises.size(); ++i) {
      used[i].assign(context[i][si].size(), false);
    }
    for (const auto& o : context[0][si]) {
      std::vector<OccId> ancestors{o.id};
      for (std::size_t i = 1; i < premises.size(); ++i) {
        const auto& other = context[i][si];
        std::size_t j = 0;
        while (j < other.size() && (used[i][j] || !(other[j].formula == o.formula))) ++j;
        if (j == other.size()) {
          throw Error(ErrorCode::kContextMismatch,
                      "premise contexts differ at " + print(o.formula));
        }
        used[i][j] = true;
        ancestors.push_back(other[j].id);
      }
      OccId id = ids.fresh();
      node.conclusion.side(s).push_back({o.formula, id});
      node.lineage[id] = std::move(ancestors);
    }
    for (std::size_t i = 1; i < premises.size(); ++i) {
      if (std::find(used[i].begin(), used[i].end(), false) != used[i].end()) {
        throw Error(ErrorCode::kContextMismatch,
                    "premise " + std::to_string(i) + " has extra context");
      }
    }
  }

  for (auto& p : principal) {
    OccId id = ids.fresh();
    node.conclusion.side(p.side).push_back({p.formula, id});
    node.principal.push_back(id);
  }
  node.premises = std::move(premises);
  node.active = std::move(active);
  return Derivation(std::make_shared<const DerivationNode>(std::move(node)));
}

Derivation make_node(DerivationNode node) {
  return Derivation(std::make_shared<const DerivationNode>(std::move(node)));
}

OccId max_occurrence_id(const Derivation& d) {
  OccId best = 0;
  for (const auto& o : d.conclusion().ante) best = std::max(best, o.id);
  for (const auto& o : d.conclusion().succ) best = std::max(best, o.id);
  for (const auto& p : d.premises()) best = std::max(best, max_occurrence_id(p));
  return best;
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises()) n += node_count(p);
  return n;
}

std::size_t cut_count(const Derivation& d) {
  std::size_t n = d.rule() == Rule::kCut ? 1 : 0;
  for (const auto& p : d.premises()) n += cut_count(p);
  return n;
}

bool is_cut_free(const Derivation& d) { return cut_count(d) == 0; }

Derivation renumber(const Derivation& d, IdAllocator& ids,
                    std::map<OccId, OccId>* root_mapping) {
  DerivationNode node;
  node.rule = d.rule();
  node.params = d.params();
  std::vector<std::map<OccId, OccId>> maps(d.premises().size());
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    node.premises.push_back(renumber(d.premises()[i], ids, &maps[i]));
  }
  for (std::size_t i = 0; i < d.active().size(); ++i) {
    std::vector<OccId> a;
    for (OccId id : d.active()[i]) {
      auto it = i < maps.size() ? maps[i].find(id) : maps[0].end();
      a.push_back(i < maps.size() && it != maps[i].end() ? it->second : id);
    }
    node.active.push_back(std::move(a));
  }
  std::map<OccId, OccId> mine;
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : d.conclusion().side(s)) {
      OccId id = ids.fresh();
      mine[o.id] = id;
      node.conclusion.side(s).push_back({o.formula, id});
    }
  }
  for (OccId p : d.principal()) {
    auto it = mine.find(p);
    node.principal.push_back(it == mine.end() ? p : it->second);
  }
  for (const auto& [old, ancestors] : d.lineage()) {
    auto it = mine.find(old);
    OccId key = it == mine.end() ? old : it->second;
    std::vector<OccId> mapped;
    for (std::size_t i = 0; i < ancestors.size(); ++i) {
      auto jt = i < maps.size() ? maps[i].find(ancestors[i]) : maps[0].end();
      mapped.push_back(i < maps.size() && jt != maps[i].end() ? jt->second
                                                             : ancestors[i]);
    }
    node.lineage[key] = std::move(mapped);
  }
  if (root_mapping) *root_mapping = std::move(mine);
  return make_node(std::move(node));
}

namespace {

bool collect_ids(const Derivation& d, std::set<OccId>& seen) {
  for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
    for (const auto& o : d.conclusion().side(s)) {
      if (!seen.insert(o.id).second) return false;
    }
  }
  for (const auto& p : d.premises()) {
    if (!collect_ids(p, seen)) return false;
  }
  return true;
}

}  // namespace

bool ids_unique(const Derivation& d) {
  std::set<OccId> seen;
  return collect_ids(d, seen);
}

const Derivation* subderivation(const Derivation& d, std::string_view path) {
  const Derivation* cur = &d;
  while (!path.empty()) {
    std::size_t dot = path.find('.');
    std::string_view part = path.substr(0, dot);
    std::size_t index = 0;
    for (char c : part) {
      if (c < '0' || c > '9') return nullptr;
      index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (index >= cur->premises().size()) return nullptr;
    cur = &cur->premises()[index];
    path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
  }
  return cur;
}

namespace {

void visit_at(const Derivation& d, const std::string& path,
              const std::function<void(const std::string&, const Derivation&)>& fn) {
  fn(path, d);
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    visit_at(d.premises()[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i),
             fn);
  }
}

}  // namespace

void visit(const Derivation& d,
           const std::function<void(const std::string&, const Derivation&)>& fn) {
  visit_at(d, "", fn);
}

}  // namespace gtcut
