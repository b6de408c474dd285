// Copyright 2026 The BTT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "btt/errors.h"

#include <array>
#include <utility>

#include <fmt/format.h>

namespace btt {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 16> kReasons{{
    {Reason::EqualityAcrossSorts, "EqualityAcrossSorts"},
    {Reason::SetEqOnClassElements, "SetEqOnClassElements"},
    {Reason::PiOverClass, "PiOverClass"},
    {Reason::UnboundVariable, "UnboundVariable"},
    {Reason::ArityMismatch, "ArityMismatch"},
    {Reason::DuplicateDeclaration, "DuplicateDeclaration"},
    {Reason::NotAType, "NotAType"},
    {Reason::NotASet, "NotASet"},
    {Reason::NotAClass, "NotAClass"},
    {Reason::NotBool, "NotBool"},
    {Reason::NotAPair, "NotAPair"},
    {Reason::NotAFunction, "NotAFunction"},
    {Reason::NotAnElement, "NotAnElement"},
    {Reason::TypeMismatch, "TypeMismatch"},
    {Reason::MacroMisuse, "MacroMisuse"},
    {Reason::ClassifyFailure, "ClassifyFailure"},
}};

}  // namespace

std::string SourceSpan::str() const {
  if (!valid()) return file.empty() ? "<generated>" : file;
  return fmt::format("{}:{}:{}", file.empty() ? "<input>" : file, start_line,
                     start_col);
}

std::string_view reason_name(Reason r) {
  for (const auto& [reason, name] : kReasons)
    if (reason == r) return name;
  return "Unknown";
}

bool parse_reason(std::string_view name, Reason& out) {
  for (const auto& [reason, n] : kReasons) {
    if (n == name) {
      out = reason;
      return true;
    }
  }
  return false;
}

std::string_view eval_failure_name(EvalFailure f) {
  switch (f) {
    case EvalFailure::ClassNotEnumerable: return "ClassNotEnumerable";
    case EvalFailure::BudgetExceeded: return "BudgetExceeded";
    case EvalFailure::TheFailure: return "TheFailure";
    case EvalFailure::DomainError: return "DomainError";
    case EvalFailure::UnboundVariable: return "UnboundVariable";
    case EvalFailure::BindingMismatch: return "BindingMismatch";
    case EvalFailure::CarrierMismatch: return "CarrierMismatch";
    case EvalFailure::NotSimpleType: return "NotSimpleType";
  }
  return "EvalError";
}

}  // namespace btt
