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


#ifndef GTCUT_SCRIPT_HPP_
#define GTCUT_SCRIPT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gtcut/derivation.hpp"

namespace gtcut {

// Proof scripts, one node per line:
//
//   <label>: <rule> [<premise labels>] <antecedent> => <succedent>
//
// Premises must be defined on earlier lines and the last unused node is the
// root. `#` starts a comment. `#! tau <label> <a|s><index>=<value> ...`
// records the expected T-complexity of occurrences of a node.
struct ScriptNode {
  std::string label;
  Rule rule = Rule::kRefMinus;
  std::vector<std::string> premises;
  PlainSequent sequent;
  std::size_t line = 0;
};

struct TauAnnotation {
  std::string label;
  Side side = Side::kAntecedent;
  std::size_t index = 0;
  std::size_t tau = 0;
  std::size_t line = 0;
};

struct Script {
  std::vector<ScriptNode> nodes;
  std::vector<TauAnnotation> annotations;
};

Script parse_script(std::string_view text);

// Turns a script into a derivation. Principal and active occurrences are
// recovered by comparing each conclusion with its premises; among equal
// formulas, context occurrences are matched first and the last copies are
// principal or active. Rule side conditions are left to the kernel.
struct Elaborated {
  Derivation root;
  std::map<std::string, Derivation> nodes;
};
Elaborated elaborate(const Script& script);

Derivation read_proof(std::string_view text);

// Labels are 1, 2, ... in post-order. With `annotate`, each node line is
// followed by its `#! tau` line.
std::string print_script(const Derivation& d, bool annotate = false);

// One formula per line; blank lines and `#` comments are skipped.
std::vector<Formula> parse_sentence_file(std::string_view text);

}  // namespace gtcut

#endif  // GTCUT_SCRIPT_HPP_
