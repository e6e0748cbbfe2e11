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

#ifndef GTCUT_ERROR_HPP_
#define GTCUT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtcut {

enum class ErrorCode {
  kCaptureViolation,
  kOpenTerm,
  kNotACode,
  kBadArity,
  kWrongFreeVariables,
  kParse,
  kEigenvariableCollision,
  kVariableCollision,
  kTargetMismatch,
  kOccurrenceMismatch,
  kUnknownOccurrence,
  kInvalidDerivation,
  kBrokenLineage,
  kContextMismatch,
  kRankViolation,
  kUnsupportedSystem,
  kUniverseTooLarge,
  kCoverageGap,
  kCertificateFailure,
  kFuelExhausted,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gtcut

#endif  // GTCUT_ERROR_HPP_
