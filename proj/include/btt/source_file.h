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

#ifndef BTT_SOURCE_FILE_H_
#define BTT_SOURCE_FILE_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "btt/context.h"
#include "btt/errors.h"
#include "btt/semantics.h"
#include "btt/syntax.h"
#include "btt/value.h"

namespace btt {

struct Directive {
  enum class Kind { Check, CheckFail, Eval, Point, NonPoint };

  Kind kind = Kind::Check;
  SourceSpan span;
  Context ctx;
  FiniteModel model;
  Expr expr;
  Expr type;                       // `#check e : T`, optional
  Reason reason = Reason::TypeMismatch;  // `#check_fail`
  std::optional<Entry> statement;  // `#check_fail R var ...` and friends
  Value expected;                  // `#eval e == v`
};

struct SourceFile {
  std::string path;
  Context ctx;
  FiniteModel model;
  std::vector<Directive> directives;
};

// Declarations are checked as they are read; a failing one throws.
SourceFile parse_source(std::string_view text, const std::string& file,
                        const Context& base = {},
                        std::size_t budget = kDefaultBudget,
                        const std::set<std::string>& loaded = {});
SourceFile load_source(const std::string& path, const Context& base = {},
                       std::size_t budget = kDefaultBudget,
                       const std::set<std::string>& loaded = {});

std::string read_file(const std::string& path);

}  // namespace btt

#endif  // BTT_SOURCE_FILE_H_
