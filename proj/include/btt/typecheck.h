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

#ifndef BTT_TYPECHECK_H_
#define BTT_TYPECHECK_H_

#include <string>
#include <vector>

#include "btt/context.h"
#include "btt/syntax.h"

namespace btt {

struct TypeVerdict {
  enum class Kind { IsBool, IsSetElement, IsSet, IsClass, IsClassElement };

  Kind kind;
  Expr type;  // the set or class for the element verdicts, else null
};

std::string verdict_name(TypeVerdict::Kind k);

// Case split on a well-formed set expression: every set is Bool, a sort
// reached by projections from a class-typed variable, a dependent pair set,
// or a dependent function set. Subsets classify as their domain.
struct SetCaseVerdict {
  enum class Case { Bool, Point, Sigma, Pi };

  Case kind = Case::Bool;
  std::vector<int> path;  // outermost projection first
  std::string root;
  std::string binder;  // Sigma/Pi binder
  Expr u;              // Sigma/Pi domain
  Expr w;              // Sigma/Pi body
};

enum class Universe { Set, Class };

// Validates entries in order against their prefixes.
Context check_context(const std::vector<Entry>& entries);
// Validates one entry against `ctx` and appends it.
Context extend(const Context& ctx, Entry entry);
// Appends a binder-style declaration without validation. Used for macro
// parameters and internal contexts whose entries are well-formed by
// construction.
Context push_param(const Context& ctx, const std::string& name,
                   const MacroTypePtr& type);

TypeVerdict check_type(const Context& ctx, const Expr& e);

// Raw inferred type: `Class` for classes, `Set` for sets, `Bool` for
// formulas, otherwise the set or class the value of `e` belongs to.
Expr infer_type(const Context& ctx, const Expr& e);
Universe universe_of(const Context& ctx, const Expr& type);
void check_has_type(const Context& ctx, const Expr& e, const Expr& type);
void check_bool(const Context& ctx, const Expr& e);
bool types_equal(const Context& ctx, const Expr& a, const Expr& b);

// Normalizes and strips subset and iso-set wrappers down to the underlying
// structural type.
Expr structural_type(const Context& ctx, const Expr& type);

SetCaseVerdict classify_set(const Context& ctx, const Expr& s);

// Syntactic approximation of the Point judgment: true when the type of `e`
// classifies as a sort.
bool is_point(const Context& ctx, const Expr& e);

MacroTypePtr macro_type_from_expr(const Context& ctx, const Expr& type);
// Macro type of a macro head: a definition, macro variable, macro lambda or
// partial application. Plain expressions get Base(infer_type(e)).
MacroTypePtr macro_type_of(const Context& ctx, const Expr& e);
void validate_macro_type(const Context& ctx, const MacroTypePtr& m);

}  // namespace btt

#endif  // BTT_TYPECHECK_H_
