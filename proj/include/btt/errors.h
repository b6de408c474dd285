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

#ifndef BTT_ERRORS_H_
#define BTT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "btt/source_span.h"

namespace btt {

// Base of every diagnostic raised by the library. `code()` is the stable,
// machine-readable identifier used in JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, SourceSpan span = {})
      : std::runtime_error(std::move(message)),
        code_(std::move(code)),
        span_(std::move(span)) {}

  const std::string& code() const { return code_; }
  const SourceSpan& span() const { return span_; }

 private:
  std::string code_;
  SourceSpan span_;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, SourceSpan span,
             std::vector<std::string> expected = {})
      : Error("ParseError", std::move(message), std::move(span)),
        expected_(std::move(expected)) {}

  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

enum class Reason {
  EqualityAcrossSorts,
  SetEqOnClassElements,
  PiOverClass,
  UnboundVariable,
  ArityMismatch,
  DuplicateDeclaration,
  NotAType,
  NotASet,
  NotAClass,
  NotBool,
  NotAPair,
  NotAFunction,
  NotAnElement,
  TypeMismatch,
  MacroMisuse,
  ClassifyFailure,
};

std::string_view reason_name(Reason r);
// Returns false when `name` is not a known reason code.
bool parse_reason(std::string_view name, Reason& out);

class TypeError : public Error {
 public:
  TypeError(Reason reason, std::string message, SourceSpan span = {})
      : Error(std::string(reason_name(reason)), std::move(message),
              std::move(span)),
        reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Raised for class expressions outside the supported fragment, e.g. classes
// whose sorts are themselves proper classes.
class UnsupportedClass : public Error {
 public:
  explicit UnsupportedClass(std::string message, SourceSpan span = {})
      : Error("UnsupportedClass", std::move(message), std::move(span)) {}
};

enum class EvalFailure {
  ClassNotEnumerable,
  BudgetExceeded,
  TheFailure,
  DomainError,
  UnboundVariable,
  BindingMismatch,
  CarrierMismatch,
  NotSimpleType,
};

std::string_view eval_failure_name(EvalFailure f);

class EvalError : public Error {
 public:
  EvalError(EvalFailure failure, std::string message, SourceSpan span = {})
      : Error(std::string(eval_failure_name(failure)), std::move(message),
              std::move(span)),
        failure_(failure) {}

  EvalFailure failure() const { return failure_; }

 private:
  EvalFailure failure_;
};

// Signals a broken internal invariant (a bug), never bad user input.
class InternalError : public Error {
 public:
  explicit InternalError(std::string message)
      : Error("InternalError", std::move(message)) {}
};

}  // namespace btt

#endif  // BTT_ERRORS_H_
