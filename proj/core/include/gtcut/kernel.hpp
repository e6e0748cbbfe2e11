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

#ifndef GTCUT_KERNEL_HPP_
#define GTCUT_KERNEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtcut/derivation.hpp"

namespace gtcut {

enum class SystemId : std::uint8_t { kLGT, kQg, kLPTN, kLPTNComp };

std::string_view system_name(SystemId system);
// Accepts "lgt", "qg", "lptn" and "lptn_comp".
std::optional<SystemId> system_from_name(std::string_view name);
bool rule_in_system(Rule rule, SystemId system);
// Systems with arithmetic geometric rules.
bool is_arithmetic_system(SystemId system);

namespace reason {
inline constexpr std::string_view kRefMinusTPrincipal = "REF_MINUS_T_PRINCIPAL";
inline constexpr std::string_view kRefMinusNotAtomic = "REF_MINUS_NOT_ATOMIC";
inline constexpr std::string_view kRefMinusMismatch = "REF_MINUS_MISMATCH";
inline constexpr std::string_view kRuleNotInSystem = "RULE_NOT_IN_SYSTEM";
inline constexpr std::string_view kPremiseCount = "PREMISE_COUNT";
inline constexpr std::string_view kBadPrincipal = "BAD_PRINCIPAL";
inline constexpr std::string_view kBadActive = "BAD_ACTIVE";
inline constexpr std::string_view kContextMismatch = "CONTEXT_MISMATCH";
inline constexpr std::string_view kLineageBroken = "LINEAGE_BROKEN";
inline constexpr std::string_view kEigenvarClash = "EIGENVAR_CLASH";
inline constexpr std::string_view kEigenvarReused = "EIGENVAR_REUSED";
inline constexpr std::string_view kPureVariable = "PURE_VARIABLE_VIOLATION";
inline constexpr std::string_view kNumeralDecodeMismatch = "NUMERAL_DECODE_MISMATCH";
inline constexpr std::string_view kNotASentenceCode = "NOT_A_SENTENCE_CODE";
inline constexpr std::string_view kInstanceMismatch = "INSTANCE_MISMATCH";
inline constexpr std::string_view kGeometricMismatch = "GEOMETRIC_MISMATCH";
inline constexpr std::string_view kTruthInBaseSystem = "TRUTH_IN_BASE_SYSTEM";
inline constexpr std::string_view kNonArithmeticTerm = "NON_ARITHMETIC_TERM";
inline constexpr std::string_view kDuplicateOccId = "DUPLICATE_OCC_ID";
}  // namespace reason

struct Violation {
  std::string path;  // node path, "" for the root
  std::string reason;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(std::string_view reason_code) const;
};

ValidationReport check(const Derivation& d, SystemId system);
ValidationReport check_lgt(const Derivation& d);
ValidationReport check_qg(const Derivation& d);
ValidationReport check_lptn(const Derivation& d, bool compositional);

// Formulas of the arithmetic systems use 0, S, +, * only; under the
// compositional rule T may also take anddot over two numerals.
bool in_language(const Formula& f, SystemId system);

// Predecessor of a term of the form S(t), including nonzero numerals.
std::optional<Term> predecessor(const Term& t);

}  // namespace gtcut

#endif  // GTCUT_KERNEL_HPP_
