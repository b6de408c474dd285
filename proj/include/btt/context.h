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

#ifndef BTT_CONTEXT_H_
#define BTT_CONTEXT_H_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "btt/syntax.h"

namespace btt {

struct MacroType;
using MacroTypePtr = std::shared_ptr<const MacroType>;

// Either Base(T), meaning "an expression whose type is T" (T may be Set or
// Class for set- and class-valued macros), or Arrow(x : arg) result[x].
struct MacroType {
  enum class Form { Base, Arrow };

  Form form = Form::Base;
  Expr base;
  std::string binder;
  MacroTypePtr arg;
  MacroTypePtr result;

  static MacroTypePtr make_base(Expr type);
  static MacroTypePtr make_arrow(std::string binder, MacroTypePtr arg,
                                 MacroTypePtr result);

  bool is_base() const { return form == Form::Base; }
  std::string str() const;
};

bool macro_type_eq(const MacroTypePtr& a, const MacroTypePtr& b);
MacroTypePtr substitute(const MacroTypePtr& m, std::string_view x,
                        const Expr& replacement);

struct MacroParam {
  std::string name;
  MacroTypePtr type;
};

struct MacroDef {
  std::string name;
  std::vector<MacroParam> params;
  Expr body;
  SourceSpan span;
};

// The curried macro lambda `Lambda(p1 : T1) ... body` for a definition.
// Arrow-typed parameters get their arrow type printed as a Pi domain.
Expr macro_lambda(const MacroDef& def);
Expr macro_type_expr(const MacroTypePtr& m);

struct Decl {
  std::string name;
  Expr type;
};

struct Assume {
  Expr formula;
};

// A macro variable, e.g. `P : Group -> Bool`.
struct MacroDecl {
  std::string name;
  MacroTypePtr type;
};

struct Define {
  MacroDef def;
  MacroTypePtr type;
  // `macro_lambda(def)` with earlier definitions already inlined.
  Expr expanded;
};

using Entry = std::variant<Decl, Assume, MacroDecl, Define>;

std::string_view entry_name(const Entry& e);

// Immutable, persistent list of entries; extension is O(1) and shares the
// prefix.
class Context {
 public:
  Context() = default;

  Context push(Entry entry) const;
  const Entry* find(std::string_view name) const;
  const Decl* find_decl(std::string_view name) const;
  const Define* find_define(std::string_view name) const;
  bool declares(std::string_view name) const { return find(name) != nullptr; }

  std::vector<Entry> entries() const;
  std::set<std::string> names() const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

 private:
  struct Frame {
    Entry entry;
    std::shared_ptr<const Frame> parent;
  };
  std::shared_ptr<const Frame> top_;
  std::size_t size_ = 0;
};

}  // namespace btt

#endif  // BTT_CONTEXT_H_
