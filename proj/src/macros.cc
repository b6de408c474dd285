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

#include "btt/macros.h"

#include <fmt/format.h>

#include "btt/errors.h"
#include "btt/semantics.h"
#include "btt/typecheck.h"

namespace btt {

namespace {

constexpr std::size_t kStepLimit = 1000000;

class Reducer {
 public:
  Expr norm(const Expr& e) {
    if (++steps_ > kStepLimit) throw InternalError("macro expansion did not terminate");
    switch (e->kind) {
      case Kind::MacroApp: {
        Expr head = norm(e->kids[0]);
        std::size_t i = 1;
        while (i < e->kids.size() && head->kind == Kind::Lambda) {
          head = norm(substitute(head->body(), head->name, e->kids[i]));
          ++i;
        }
        if (i == e->kids.size()) return head;
        std::vector<Expr> kids{head};
        for (; i < e->kids.size(); ++i) kids.push_back(norm(e->kids[i]));
        return macro_app(kids[0], {kids.begin() + 1, kids.end()}, e->span);
      }
      case Kind::App: {
        Expr fn = norm(e->left());
        if (fn->kind == Kind::Lambda)
          return norm(substitute(fn->body(), fn->name, e->right()));
        return with_kids(e, {fn, norm(e->right())});
      }
      case Kind::Proj: {
        Expr target = norm(e->kids[0]);
        if (target->kind == Kind::Pair) return target->kids[e->index - 1];
        return with_kids(e, {target});
      }
      default: {
        if (e->kids.empty()) return e;
        std::vector<Expr> kids;
        kids.reserve(e->kids.size());
        bool changed = false;
        for (const auto& k : e->kids) {
          kids.push_back(norm(k));
          changed = changed || kids.back() != k;
        }
        return changed ? with_kids(e, std::move(kids)) : e;
      }
    }
  }

 private:
  std::size_t steps_ = 0;
};

Expr inline_defs(const Context& ctx, const Expr& e) {
  Expr out = e;
  for (const auto& name : e->fvs) {
    if (const Define* d = ctx.find_define(name)) out = substitute(out, name, d->expanded);
  }
  return out;
}

}  // namespace

MacroTypePtr check_macro(const Context& ctx, const MacroDef& def) {
  Context cur = ctx;
  std::vector<MacroParam> params = def.params;
  Expr body = def.body;
  std::vector<std::pair<std::string, MacroTypePtr>> done;
  for (std::size_t i = 0; i < params.size(); ++i) {
    MacroParam p = params[i];
    validate_macro_type(cur, p.type);
    if (cur.declares(p.name)) {
      std::set<std::string> taken = cur.names();
      collect_names(body, taken);
      for (const auto& q : params) taken.insert(q.name);
      std::string renamed = fresh_name(p.name, taken);
      body = substitute(body, p.name, var(renamed));
      for (std::size_t j = i + 1; j < params.size(); ++j)
        params[j].type = substitute(params[j].type, p.name, var(renamed));
      p.name = renamed;
    }
    cur = push_param(cur, p.name, p.type);
    done.emplace_back(p.name, p.type);
  }
  MacroTypePtr out = macro_type_of(cur, body);
  for (auto it = done.rbegin(); it != done.rend(); ++it)
    out = MacroType::make_arrow(it->first, it->second, out);
  return out;
}

Define make_define(const Context& ctx, const MacroDef& def) {
  Define d;
  d.def = def;
  d.type = check_macro(ctx, def);
  d.expanded = expand(ctx, macro_lambda(def));
  return d;
}

Expr expand(const Context& ctx, const Expr& e) {
  Reducer r;
  return r.norm(inline_defs(ctx, e));
}

Expr apply_def(const Context& ctx, const MacroDef& def,
               const std::vector<Expr>& args) {
  if (args.size() != def.params.size())
    throw TypeError(Reason::ArityMismatch,
                    fmt::format("'{}' expects {} arguments, got {}", def.name,
                                def.params.size(), args.size()));
  if (args.empty()) return expand(ctx, def.body);
  return expand(ctx, macro_app(macro_lambda(def), args));
}

bool check_cryptomorphism(const Context& ctx, const Expr& sigma,
                          const Expr& tau, const MacroDef& f,
                          const MacroDef& g, const FiniteModel& model,
                          const std::vector<Value>& sigma_instances,
                          const std::vector<Value>& tau_instances) {
  std::set<std::string> taken = ctx.names();
  for (const auto& [k, v] : model.assignment) taken.insert(k);
  std::string x = fresh_name("x", taken);
  Expr gf = apply_def(ctx, g, {apply_def(ctx, f, {var(x)})});
  Expr fg = apply_def(ctx, f, {apply_def(ctx, g, {var(x)})});
  auto roundtrips = [&](const Expr& cls, const Expr& composite,
                        const std::vector<Value>& instances) {
    Context inner = ctx.push(Decl{x, cls});
    for (const auto& v : instances) {
      if (!(eval(inner, model, composite, {{x, v}}) == v)) return false;
    }
    return true;
  };
  return roundtrips(sigma, gf, sigma_instances) &&
         roundtrips(tau, fg, tau_instances);
}

}  // namespace btt
