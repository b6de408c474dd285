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

#include "btt/context.h"

#include <algorithm>

namespace btt {

MacroTypePtr MacroType::make_base(Expr type) {
  auto m = std::make_shared<MacroType>();
  m->form = Form::Base;
  m->base = std::move(type);
  return m;
}

MacroTypePtr MacroType::make_arrow(std::string binder, MacroTypePtr arg,
                                   MacroTypePtr result) {
  auto m = std::make_shared<MacroType>();
  m->form = Form::Arrow;
  m->binder = std::move(binder);
  m->arg = std::move(arg);
  m->result = std::move(result);
  return m;
}

std::string MacroType::str() const { return print(macro_type_expr(
    std::make_shared<MacroType>(*this))); }

Expr macro_type_expr(const MacroTypePtr& m) {
  if (m->is_base()) return m->base;
  return pi(m->binder, macro_type_expr(m->arg), macro_type_expr(m->result));
}

bool macro_type_eq(const MacroTypePtr& a, const MacroTypePtr& b) {
  return alpha_eq(macro_type_expr(a), macro_type_expr(b));
}

MacroTypePtr substitute(const MacroTypePtr& m, std::string_view x,
                        const Expr& replacement) {
  if (m->is_base()) return MacroType::make_base(substitute(m->base, x, replacement));
  MacroTypePtr arg = substitute(m->arg, x, replacement);
  if (m->binder == x) return MacroType::make_arrow(m->binder, arg, m->result);
  std::string binder = m->binder;
  MacroTypePtr result = m->result;
  if (occurs_free(replacement, binder)) {
    std::set<std::string> taken = free_vars(replacement);
    Expr res_expr = macro_type_expr(result);
    for (const auto& v : res_expr->fvs) taken.insert(v);
    taken.insert(std::string(x));
    std::string renamed = fresh_name(binder, taken);
    result = substitute(result, binder, var(renamed));
    binder = renamed;
  }
  return MacroType::make_arrow(binder, arg, substitute(result, x, replacement));
}

Expr macro_lambda(const MacroDef& def) {
  Expr out = def.body;
  for (auto it = def.params.rbegin(); it != def.params.rend(); ++it)
    out = lambda(it->name, macro_type_expr(it->type), out);
  return out;
}

std::string_view entry_name(const Entry& e) {
  return std::visit(
      [](const auto& v) -> std::string_view {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Decl>) return v.name;
        if constexpr (std::is_same_v<T, MacroDecl>) return v.name;
        if constexpr (std::is_same_v<T, Define>) return v.def.name;
        return {};
      },
      e);
}

Context Context::push(Entry entry) const {
  Context out;
  out.top_ = std::make_shared<const Frame>(Frame{std::move(entry), top_});
  out.size_ = size_ + 1;
  return out;
}

const Entry* Context::find(std::string_view name) const {
  for (const Frame* f = top_.get(); f != nullptr; f = f->parent.get()) {
    if (!name.empty() && entry_name(f->entry) == name) return &f->entry;
  }
  return nullptr;
}

const Decl* Context::find_decl(std::string_view name) const {
  const Entry* e = find(name);
  return e ? std::get_if<Decl>(e) : nullptr;
}

const Define* Context::find_define(std::string_view name) const {
  const Entry* e = find(name);
  return e ? std::get_if<Define>(e) : nullptr;
}

std::vector<Entry> Context::entries() const {
  std::vector<Entry> out;
  for (const Frame* f = top_.get(); f != nullptr; f = f->parent.get())
    out.push_back(f->entry);
  std::reverse(out.begin(), out.end());
  return out;
}

std::set<std::string> Context::names() const {
  std::set<std::string> out;
  for (const Frame* f = top_.get(); f != nullptr; f = f->parent.get()) {
    auto n = entry_name(f->entry);
    if (!n.empty()) out.insert(std::string(n));
  }
  return out;
}

}  // namespace btt
