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

#ifndef GTCUT_DERIVATION_HPP_
#define GTCUT_DERIVATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtcut/syntax.hpp"

namespace gtcut {

using OccId = std::uint32_t;

// One occurrence of a formula. Ids are unique within a derivation, so the
// same formula at two places is two distinct occurrences.
struct Occurrence {
  Formula formula;
  OccId id = 0;
};

enum class Side : std::uint8_t { kAntecedent, kSuccedent };

std::string_view side_name(Side side);

struct Sequent {
  std::vector<Occurrence> ante;
  std::vector<Occurrence> succ;

  const std::vector<Occurrence>& side(Side s) const {
    return s == Side::kAntecedent ? ante : succ;
  }
  std::vector<Occurrence>& side(Side s) {
    return s == Side::kAntecedent ? ante : succ;
  }
  // Side and position of an occurrence id.
  std::optional<std::pair<Side, std::size_t>> find(OccId id) const;
  const Occurrence* lookup(OccId id) const;
  bool empty() const { return ante.empty() && succ.empty(); }
};

// Formula-only view of a sequent, as written by users.
struct PlainSequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;
};

PlainSequent plain(const Sequent& s);
// Multiset equality of the formulas, ignoring order and ids.
bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b);
bool same_sequent(const PlainSequent& a, const PlainSequent& b);
bool same_sequent(const Sequent& a, const Sequent& b);

std::string print(const PlainSequent& s);
std::string print(const Sequent& s);
// Parses "f1, f2 => g1" with formulas in prefix notation.
PlainSequent parse_sequent(std::string_view text);

enum class Rule : std::uint8_t {
  kRefMinus,
  kTopAxiom,
  kBotAxiom,
  kCut,
  kTruthLeft,
  kTruthRight,
  kNegLeft,
  kNegRight,
  kAndLeft,
  kAndRight,
  kAllLeft,
  kAllRight,
  kEq1,
  kEq2,
  kQg1,
  kQg2,
  kQg3,
  kQg4,
  kQg5,
  kQg6,
  kQg7,
  kCompAnd,
};

inline constexpr std::size_t kRuleCount = 22;

// Short script spelling, e.g. "ref", "tl", "qg3".
std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);
bool is_axiom(Rule rule);
std::size_t premise_count(Rule rule);

class Derivation;

struct DerivationNode {
  Rule rule;
  Sequent conclusion;
  std::vector<Derivation> premises;
  // Occurrences of the conclusion introduced by the rule.
  std::vector<OccId> principal;
  // For each premise, the occurrences consumed by the rule.
  std::vector<std::vector<OccId>> active;
  // Rule parameters: the instance term of (forall l), the eigenvariable of
  // (forall r), the term t and eigenvariable y of (Qg3).
  std::vector<Term> params;
  // Every non-principal conclusion occurrence mapped to one occurrence of
  // the same formula in each premise.
  std::map<OccId, std::vector<OccId>> lineage;
};

class Derivation {
 public:
  explicit Derivation(std::shared_ptr<const DerivationNode> node)
      : node_(std::move(node)) {}

  const DerivationNode& node() const { return *node_; }
  Rule rule() const { return node_->rule; }
  const Sequent& conclusion() const { return node_->conclusion; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const std::vector<OccId>& principal() const { return node_->principal; }
  const std::vector<std::vector<OccId>>& active() const { return node_->active; }
  const std::vector<Term>& params() const { return node_->params; }
  const std::map<OccId, std::vector<OccId>>& lineage() const {
    return node_->lineage;
  }
  const void* identity() const { return node_.get(); }

 private:
  std::shared_ptr<const DerivationNode> node_;
};

// Mints occurrence ids that have not been used yet.
class IdAllocator {
 public:
  IdAllocator() = default;
  explicit IdAllocator(OccId next) : next_(next) {}
  // Starts after the largest id in `d`.
  static IdAllocator after(const Derivation& d);
  OccId fresh() { return next_++; }
  OccId peek() const { return next_; }

 private:
  OccId next_ = 1;
};

Sequent make_sequent(const PlainSequent& s, IdAllocator& ids);

// Initial sequent with the given occurrences as principal.
Derivation make_axiom(Rule rule, Sequent conclusion, std::vector<OccId> principal,
                      std::vector<Term> params = {});

struct NewFormula {
  Side side;
  Formula formula;
};

// Applies a rule to premises. The conclusion consists of the premise
// context (everything except the active occurrences) followed by the
// principal formulas. Two-premise rules pair context occurrences by
// formula; throws ErrorCode::kContextMismatch when the contexts differ.
Derivation infer(Rule rule, std::vector<Derivation> premises,
                 std::vector<std::vector<OccId>> active,
                 std::vector<NewFormula> principal, std::vector<Term> params,
                 IdAllocator& ids);

// Wraps raw parts without any checks.
Derivation make_node(DerivationNode node);

OccId max_occurrence_id(const Derivation& d);
std::size_t node_count(const Derivation& d);
std::size_t cut_count(const Derivation& d);
bool is_cut_free(const Derivation& d);

// Gives every occurrence in `d` a fresh id from `ids`; shared subtrees are
// copied so ids are unique. `mapping` receives old->new for the root.
Derivation renumber(const Derivation& d, IdAllocator& ids,
                    std::map<OccId, OccId>* root_mapping = nullptr);

// True when no id is used twice across the whole tree.
bool ids_unique(const Derivation& d);

// Node paths address subtrees: "" is the root, "0.1" the second premise of
// the first premise.
const Derivation* subderivation(const Derivation& d, std::string_view path);

// Pre-order walk with node paths.
void visit(const Derivation& d,
           const std::function<void(const std::string&, const Derivation&)>& fn);

}  // namespace gtcut

#endif  // GTCUT_DERIVATION_HPP_
