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

#ifndef BTT_MACROS_H_
#define BTT_MACROS_H_

#include <vector>

#include "btt/context.h"
#include "btt/syntax.h"
#include "btt/value.h"

namespace btt {

struct FiniteModel;

// Type of a definition: an arrow over its parameters ending in the body's
// type. Parameters clashing with context names are renamed.
MacroTypePtr check_macro(const Context& ctx, const MacroDef& def);

// Checks `def` and records its inlined lambda for later expansion.
Define make_define(const Context& ctx, const MacroDef& def);

// Inlines definitions, then reduces macro applications, lambda
// applications and projections of pairs in normal order.
Expr expand(const Context& ctx, const Expr& e);

// Applies a definition to arguments and expands the result.
Expr apply_def(const Context& ctx, const MacroDef& def,
               const std::vector<Expr>& args);

// Both roundtrips G[F[x]] = x and F[G[y]] = y, evaluated on the given
// instances of sigma and tau.
bool check_cryptomorphism(const Context& ctx, const Expr& sigma,
                          const Expr& tau, const MacroDef& f,
                          const MacroDef& g, const FiniteModel& model,
                          const std::vector<Value>& sigma_instances,
                          const std::vector<Value>& tau_instances);

}  // namespace btt

#endif  // BTT_MACROS_H_
