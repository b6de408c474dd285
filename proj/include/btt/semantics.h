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

#ifndef BTT_SEMANTICS_H_
#define BTT_SEMANTICS_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btt/context.h"
#include "btt/syntax.h"
#include "btt/value.h"

namespace btt {

inline constexpr std::size_t kDefaultBudget = 10000;

struct FiniteModel {
  std::map<std::string, Value> assignment;
  std::size_t budget = kDefaultBudget;
  // Declarations pulled in by `import`; empty when the model imports nothing.
  Context ctx;
  // Files already read into ctx; importing one of them again is a no-op.
  std::set<std::string> files;
};

using Bindings = std::vector<std::pair<std::string, Value>>;

// Expands macros, then evaluates. `locals` shadow the model assignment.
Value eval(const Context& ctx, const FiniteModel& model, const Expr& e,
           const Bindings& locals = {});

// Evaluates an already expanded expression.
Value eval_expanded(const Context& ctx, const FiniteModel& model,
                    const Expr& e, const Bindings& locals = {});

// Membership of v in a set or class expression, without materializing
// classes or function spaces.
bool check_inhabits(const Value& v, const Context& ctx,
                    const FiniteModel& model, const Expr& type,
                    const Bindings& locals = {});

// Parses a .bttm model. Imported sources extend `ctx`; every binding of a
// declared variable is checked against its type, and every assumption whose
// variables are all bound must hold.
FiniteModel parse_model(std::string_view text, const std::string& file,
                        const Context& ctx = {},
                        const std::set<std::string>& loaded = {});
FiniteModel load_model(const std::string& path, const Context& ctx = {},
                       const std::set<std::string>& loaded = {});

void validate_model(const Context& ctx, const FiniteModel& model);

// A single value literal, resolving bare names against `lets`.
Value parse_value(std::string_view text, const std::map<std::string, Value>& lets = {});

}  // namespace btt

#endif  // BTT_SEMANTICS_H_
