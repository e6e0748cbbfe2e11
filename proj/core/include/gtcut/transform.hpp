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

#ifndef GTCUT_TRANSFORM_HPP_
#define GTCUT_TRANSFORM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtcut/derivation.hpp"
#include "gtcut/kernel.hpp"
#include "gtcut/measures.hpp"

namespace gtcut {

struct TransformOptions {
  SystemId system = SystemId::kLGT;
  // Throw ErrorCode::kCertificateFailure when a bound check fails.
  bool enforce = true;
  // Upper limit on recursive reduction steps.
  std::size_t fuel = 5'000'000;
};

struct BoundCheck {
  std::string name;
  std::string detail;
  bool ok = true;
};

struct Certificate {
  Measures before;
  Measures after;
  std::vector<BoundCheck> checks;
  // End-sequent occurrence ids of the input mapped to those of the output.
  std::map<OccId, OccId> id_map;

  bool ok() const;
  std::string summary() const;
};

struct TransformResult {
  std::vector<Derivation> outputs;
  Certificate certificate;
  // Occurrences of interest in the first output's end-sequent: the added
  // formulas for weaken, the components for invert, the merged occurrence
  // for contract.
  std::vector<OccId> focus;
  // Second output's components when inverting a conjunction on the right.
  std::vector<OccId> focus_second;

  const Derivation& output() const { return outputs.front(); }
};

// Gamma, Theta => Delta, Lambda with all measures unchanged and tau 0 for
// the new occurrences. Clashing eigenvariables are renamed first. In the
// arithmetic systems a variable that is bound in the proof and free in the
// new formulas (or vice versa) raises ErrorCode::kVariableCollision.
TransformResult weaken(const Derivation& d, const std::vector<Formula>& theta,
                       const std::vector<Formula>& lambda,
                       const TransformOptions& options = {});

// Gamma(t/x) => Delta(t/x). Throws kEigenvariableCollision when t contains
// an eigenvariable of the proof.
TransformResult substitute_proof(const Derivation& d, const std::string& x,
                                 const Term& t, const TransformOptions& options = {});

// Inverts the rule for the top connective of `target`. Conjunctions on the
// right and compositional truth atoms produce two outputs. `variable` picks
// the instance variable when inverting a universal formula on the right.
TransformResult invert(const Derivation& d, OccId target,
                       const TransformOptions& options = {},
                       std::optional<std::string> variable = std::nullopt);

// Merges two occurrences of one formula on one side. The merged occurrence
// keeps the id of `a`.
TransformResult contract(const Derivation& d, OccId a, OccId b,
                         const TransformOptions& options = {});

// From d0 proving Gamma => Delta, phi (phi at `phi0`) and d1 proving
// phi, Gamma => Delta (phi at `phi1`), builds a proof of Gamma => Delta
// whose cuts all have rank at most the larger input cut rank.
TransformResult reduce_cut(const Derivation& d0, OccId phi0, const Derivation& d1,
                           OccId phi1, const TransformOptions& options = {});

// Removes every cut, highest rank first, topmost first within a rank.
TransformResult eliminate_cuts(const Derivation& d, const TransformOptions& options = {});

}  // namespace gtcut

#endif  // GTCUT_TRANSFORM_HPP_
