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

#ifndef GTCUT_SRC_TRANSFORM_INTERNAL_HPP_
#define GTCUT_SRC_TRANSFORM_INTERNAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtcut/derivation.hpp"
#include "gtcut/kernel.hpp"

namespace gtcut::detail {

struct Ctx {
  SystemId system = SystemId::kLGT;
  IdAllocator ids;
  VariableSet used;
  std::size_t fuel = 0;

  std::string fresh_var(const std::string& stem);
  void spend();
};

Ctx make_ctx(SystemId system, const std::vector<const Derivation*>& inputs,
             std::size_t fuel);
void collect_proof_variables(const Derivation& d, VariableSet& out);

// Eigenvariable of a (forall r) or (Qg3) node.
std::optional<std::string> eigenvariable(const Derivation& d);

bool is_principal(const Derivation& d, OccId id);
Derivation relabel_root(const Derivation& d, const std::map<OccId, OccId>& m);
// Removes a non-principal end-sequent occurrence from an axiom.
Derivation axiom_without(const Derivation& d, OccId id);

Derivation subst_raw(const Derivation& d, const std::string& x, const Term& t);
// Renames eigenvariables (all, or only those in `only`) to fresh names.
Derivation freshen_raw(const Derivation& d, Ctx& ctx, const VariableSet* only);

struct Weakened {
  Derivation d;
  std::vector<OccId> added;  // ante additions first, then succ
};
Weakened weaken_raw(const Derivation& d, const std::vector<NewFormula>& extra, Ctx& ctx);

struct Inverted {
  Derivation d;
  std::vector<OccId> comps;
};
std::vector<Inverted> invert_raw(const Derivation& d, OccId target, Ctx& ctx,
                                 const std::optional<std::string>& variable);

Derivation contract_raw(const Derivation& d, OccId a, OccId b, Ctx& ctx);
// Deletes an occurrence that is never principal below an axiom: top on the
// left, bottom on the right, or S(t) = 0 on the right (whose identity axioms
// turn into (Qg1) axioms).
Derivation drop_raw(const Derivation& d, OccId o, Ctx& ctx);

VariableSet free_variables_of(const Sequent& s);

// Cuts c0 (right in d0) against c1 (left in d1). The end-sequent is the
// union of both contexts, with their ids. Cuts of rank above `allowance`
// are reduced away.
Derivation reduce_raw(const Derivation& d0, OccId c0, const Derivation& d1, OccId c1,
                      std::size_t allowance, Ctx& ctx);

}  // namespace gtcut::detail

#endif  // GTCUT_SRC_TRANSFORM_INTERNAL_HPP_
