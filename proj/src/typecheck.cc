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

#include "btt/typecheck.h"

#include <fmt/format.h>

#include "btt/errors.h"
#include "btt/macros.h"
#include "btt/sanorm.h"

namespace btt {

namespace {

bool is_univ(const Expr& t) {
  return t->kind == Kind::UnivSet || t->kind == Kind::UnivClass;
}

// Binder entry: renames the binder when it would shadow a context name so
// that types mentioning outer names stay meaningful.
struct Scoped {
  Context ctx;
  std::string name;
  Expr body;
};

Scoped enter(const Context& ctx, const std::string& name, const Expr& dom,
             const Expr& body) {
  if (!occurs_free(body, name)) return {ctx, name, body};
  std::string n = name;
  Expr b = body;
  if (ctx.declares(name)) {
    std::set<std::string> taken = ctx.names();
    for (const auto& v : body->fvs) taken.insert(v);
    n = fresh_name(name, taken);
    b = substitute(body, name, var(n));
  }
  return {ctx.push(Decl{n, dom}), n, b};
}

[[noreturn]] void fail(Reason r, const Expr& at, std::string msg) {
  throw TypeError(r, std::move(msg), at->span);
}

// Type followed by its successive subset/iso-set supertypes.
std::vector<Expr> supertypes(const Context& ctx, const Expr& type) {
  std::vector<Expr> out;
  Expr t = expand(ctx, type);
  for (;;) {
    out.push_back(t);
    if (t->kind == Kind::Subset) {
      t = t->domain();
    } else if (t->kind == Kind::IdSet) {
      t = expand(ctx, id_carrier(ctx, t->kids[0], t->kids[1], t->kids[2]));
    } else {
      return out;
    }
  }
}

bool share_supertype(const Context& ctx, const Expr& a, const Expr& b) {
  auto sa = supertypes(ctx, a);
  auto sb = supertypes(ctx, b);
  for (const auto& x : sa)
    for (const auto& y : sb)
      if (alpha_eq(x, y)) return true;
  return false;
}

Expr infer(const Context& ctx, const Expr& e);

Universe universe(const Context& ctx, const Expr& t) {
  Expr u = infer(ctx, t);
  if (u->kind == Kind::UnivSet) return Universe::Set;
  if (u->kind == Kind::UnivClass) return Universe::Class;
  fail(Reason::NotAType, t, fmt::format("'{}' is not a set or class", print(t)));
}

Expr infer_var(const Context& ctx, const Expr& e) {
  const Entry* entry = ctx.find(e->name);
  if (entry == nullptr)
    fail(Reason::UnboundVariable, e, fmt::format("unbound variable '{}'", e->name));
  if (const auto* d = std::get_if<Decl>(entry)) return d->type;
  MacroTypePtr mt;
  if (const auto* d = std::get_if<Define>(entry)) mt = d->type;
  if (const auto* d = std::get_if<MacroDecl>(entry)) mt = d->type;
  if (mt && mt->is_base()) return mt->base;
  fail(Reason::MacroMisuse, e,
       fmt::format("macro '{}' used without arguments", e->name));
}

Expr infer_set_eq(const Context& ctx, const Expr& e) {
  Expr tu = infer(ctx, e->left());
  Expr tw = infer(ctx, e->right());
  for (const Expr* t : {&tu, &tw}) {
    if (is_univ(*t) || universe(ctx, *t) == Universe::Class) {
      fail(Reason::SetEqOnClassElements, e,
           "set-theoretic equality between class elements is not well-formed; "
           "use =[class]=");
    }
  }
  if (!share_supertype(ctx, tu, tw)) {
    fail(Reason::EqualityAcrossSorts, e,
         fmt::format("equality between elements of '{}' and '{}'", print(tu),
                     print(tw)));
  }
  return bool_sort();
}

Expr infer_iso(const Context& ctx, const Expr& e, Expr result) {
  const Expr& cls = e->kids[0];
  if (universe(ctx, cls) != Universe::Class)
    fail(Reason::NotAClass, cls, fmt::format("'{}' is not a class", print(cls)));
  check_has_type(ctx, e->kids[1], cls);
  check_has_type(ctx, e->kids[2], cls);
  return result;
}

Expr infer(const Context& ctx, const Expr& e) {
  switch (e->kind) {
    case Kind::UnivSet:
      return univ_class();
    case Kind::UnivClass:
      fail(Reason::NotAType, e, "Class has no type");
    case Kind::BoolSort:
      return univ_set();
    case Kind::BoolLit:
      return bool_sort();
    case Kind::Var:
      return infer_var(ctx, e);
    case Kind::Sigma: {
      Universe a = universe(ctx, e->domain());
      auto s = enter(ctx, e->name, e->domain(), e->body());
      Universe b = universe(s.ctx, s.body);
      return a == Universe::Class || b == Universe::Class ? univ_class()
                                                          : univ_set();
    }
    case Kind::Subset: {
      Universe a = universe(ctx, e->domain());
      auto s = enter(ctx, e->name, e->domain(), e->body());
      check_bool(s.ctx, s.body);
      return a == Universe::Class ? univ_class() : univ_set();
    }
    case Kind::Pi: {
      if (universe(ctx, e->domain()) != Universe::Set)
        fail(Reason::PiOverClass, e, "function domain must be a set");
      auto s = enter(ctx, e->name, e->domain(), e->body());
      if (universe(s.ctx, s.body) != Universe::Set)
        fail(Reason::PiOverClass, e, "function codomain must be a set");
      return univ_set();
    }
    case Kind::Lambda: {
      if (universe(ctx, e->domain()) != Universe::Set)
        fail(Reason::MacroMisuse, e,
             "lambda over a class is a macro and must be applied with [ ]");
      auto s = enter(ctx, e->name, e->domain(), e->body());
      Expr tb = infer(s.ctx, s.body);
      if (is_univ(tb) || universe(s.ctx, tb) != Universe::Set)
        fail(Reason::PiOverClass, e, "function values must be set elements");
      return pi(s.name, e->domain(), tb);
    }
    case Kind::Pair: {
      Expr tl = infer(ctx, e->left());
      Expr tr = infer(ctx, e->right());
      if (tl->kind == Kind::UnivClass || tr->kind == Kind::UnivClass)
        fail(Reason::NotAnElement, e, "classes cannot be paired");
      return product(tl, tr);
    }
    case Kind::Proj: {
      const Expr& target = e->kids[0];
      Expr tp = infer(ctx, target);
      if (is_univ(tp))
        fail(Reason::NotAPair, e, fmt::format("'{}' is not a pair", print(target)));
      Expr st = structural_type(ctx, tp);
      if (st->kind != Kind::Sigma)
        fail(Reason::NotAPair, e,
             fmt::format("'{}' has type '{}', not a pair type", print(target),
                         print(tp)));
      if (e->index == 1) return st->domain();
      return substitute(st->body(), st->name, proj(1, target));
    }
    case Kind::App: {
      Expr tf = infer(ctx, e->left());
      if (is_univ(tf))
        fail(Reason::NotAFunction, e, "applying a non-function");
      Expr st = structural_type(ctx, tf);
      if (st->kind != Kind::Pi)
        fail(Reason::NotAFunction, e,
             fmt::format("'{}' has type '{}', not a function type",
                         print(e->left()), print(tf)));
      check_has_type(ctx, e->right(), st->domain());
      return substitute(st->body(), st->name, e->right());
    }
    case Kind::SetEq:
      return infer_set_eq(ctx, e);
    case Kind::IsoEq:
      return infer_iso(ctx, e, bool_sort());
    case Kind::IdSet:
      return infer_iso(ctx, e, univ_set());
    case Kind::Forall:
    case Kind::Exists: {
      universe(ctx, e->domain());
      auto s = enter(ctx, e->name, e->domain(), e->body());
      check_bool(s.ctx, s.body);
      return bool_sort();
    }
    case Kind::Not:
      check_bool(ctx, e->kids[0]);
      return bool_sort();
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff:
      check_bool(ctx, e->kids[0]);
      check_bool(ctx, e->kids[1]);
      return bool_sort();
    case Kind::The: {
      if (universe(ctx, e->domain()) != Universe::Set)
        fail(Reason::NotASet, e, "The requires a set domain");
      auto s = enter(ctx, e->name, e->domain(), e->body());
      check_bool(s.ctx, s.body);
      return e->domain();
    }
    case Kind::MacroApp: {
      MacroTypePtr mt = macro_type_of(ctx, e);
      if (!mt->is_base())
        fail(Reason::MacroMisuse, e,
             fmt::format("partial macro application of type '{}'", mt->str()));
      return mt->base;
    }
  }
  fail(Reason::NotAType, e, "unknown construct");
}

void check_macro_arg(const Context& ctx, const Expr& arg,
                     const MacroTypePtr& expected) {
  if (expected->is_base()) {
    check_has_type(ctx, arg, expected->base);
    return;
  }
  bool literal = arg->kind == Kind::Var || arg->kind == Kind::Lambda ||
                 arg->kind == Kind::MacroApp;
  if (!literal)
    fail(Reason::MacroMisuse, arg, "macro-typed arguments must be macro expressions");
  MacroTypePtr got = macro_type_of(ctx, arg);
  if (!alpha_eq(expand(ctx, macro_type_expr(got)),
                expand(ctx, macro_type_expr(expected)))) {
    fail(Reason::TypeMismatch, arg,
         fmt::format("macro argument has type '{}', expected '{}'", got->str(),
                     expected->str()));
  }
}

}  // namespace

std::string verdict_name(TypeVerdict::Kind k) {
  switch (k) {
    case TypeVerdict::Kind::IsBool: return "IsBool";
    case TypeVerdict::Kind::IsSetElement: return "IsSetElement";
    case TypeVerdict::Kind::IsSet: return "IsSet";
    case TypeVerdict::Kind::IsClass: return "IsClass";
    case TypeVerdict::Kind::IsClassElement: return "IsClassElement";
  }
  return "?";
}

Expr infer_type(const Context& ctx, const Expr& e) { return infer(ctx, e); }

Universe universe_of(const Context& ctx, const Expr& type) {
  return universe(ctx, type);
}

TypeVerdict check_type(const Context& ctx, const Expr& e) {
  Expr t = infer(ctx, e);
  if (t->kind == Kind::UnivClass) return {TypeVerdict::Kind::IsClass, nullptr};
  if (t->kind == Kind::UnivSet) return {TypeVerdict::Kind::IsSet, nullptr};
  Expr tn = expand(ctx, t);
  if (tn->kind == Kind::BoolSort) return {TypeVerdict::Kind::IsBool, nullptr};
  if (universe(ctx, t) == Universe::Set)
    return {TypeVerdict::Kind::IsSetElement, t};
  return {TypeVerdict::Kind::IsClassElement, t};
}

void check_bool(const Context& ctx, const Expr& e) {
  Expr t = infer(ctx, e);
  if (is_univ(t) || structural_type(ctx, t)->kind != Kind::BoolSort)
    fail(Reason::NotBool, e, fmt::format("'{}' is not a formula", print(e)));
}

bool types_equal(const Context& ctx, const Expr& a, const Expr& b) {
  return alpha_eq(expand(ctx, a), expand(ctx, b));
}

Expr structural_type(const Context& ctx, const Expr& type) {
  return supertypes(ctx, type).back();
}

void check_has_type(const Context& ctx, const Expr& e, const Expr& type) {
  if (is_univ(type)) {
    Expr t = infer(ctx, e);
    if (t->kind != type->kind) {
      Reason r = type->kind == Kind::UnivSet ? Reason::NotASet : Reason::NotAClass;
      fail(r, e, fmt::format("'{}' is not a {}", print(e),
                             type->kind == Kind::UnivSet ? "set" : "class"));
    }
    return;
  }
  if (e->kind == Kind::MacroApp) {
    infer(ctx, e);
    Expr x = expand(ctx, e);
    if (x->kind == Kind::Pair || x->kind == Kind::Lambda) {
      check_has_type(ctx, x, type);
      return;
    }
  }
  Expr st = structural_type(ctx, type);
  if (e->kind == Kind::Pair && st->kind == Kind::Sigma) {
    check_has_type(ctx, e->left(), st->domain());
    check_has_type(ctx, e->right(), substitute(st->body(), st->name, e->left()));
    return;
  }
  if (e->kind == Kind::Lambda && st->kind == Kind::Pi &&
      types_equal(ctx, e->domain(), st->domain())) {
    auto s = enter(ctx, e->name, e->domain(), e->body());
    check_has_type(s.ctx, s.body, substitute(st->body(), st->name, var(s.name)));
    return;
  }
  Expr t = infer(ctx, e);
  if (is_univ(t))
    fail(Reason::TypeMismatch, e,
         fmt::format("'{}' is a {}, expected an element of '{}'", print(e),
                     t->kind == Kind::UnivSet ? "set" : "class", print(type)));
  if (!share_supertype(ctx, t, type))
    fail(Reason::TypeMismatch, e,
         fmt::format("'{}' has type '{}', expected '{}'", print(e), print(t),
                     print(type)));
}

Context push_param(const Context& ctx, const std::string& name,
                   const MacroTypePtr& type) {
  if (type->is_base()) return ctx.push(Decl{name, type->base});
  return ctx.push(MacroDecl{name, type});
}

MacroTypePtr macro_type_from_expr(const Context& ctx, const Expr& type) {
  if (type->kind != Kind::Pi) return MacroType::make_base(type);
  auto is_set = [](const Context& c, const Expr& t) {
    try {
      return universe(c, t) == Universe::Set;
    } catch (const TypeError&) {
      return false;
    }
  };
  if (is_set(ctx, type->domain()) &&
      is_set(ctx.push(Decl{type->name, type->domain()}), type->body()))
    return MacroType::make_base(type);
  MacroTypePtr arg = macro_type_from_expr(ctx, type->domain());
  MacroTypePtr res =
      macro_type_from_expr(push_param(ctx, type->name, arg), type->body());
  return MacroType::make_arrow(type->name, arg, res);
}

void validate_macro_type(const Context& ctx, const MacroTypePtr& m) {
  if (m->is_base()) {
    if (!is_univ(m->base)) universe(ctx, m->base);
    return;
  }
  validate_macro_type(ctx, m->arg);
  validate_macro_type(push_param(ctx, m->binder, m->arg), m->result);
}

MacroTypePtr macro_type_of(const Context& ctx, const Expr& e) {
  if (e->kind == Kind::Var) {
    const Entry* entry = ctx.find(e->name);
    if (const auto* d = entry ? std::get_if<Define>(entry) : nullptr) return d->type;
    if (const auto* d = entry ? std::get_if<MacroDecl>(entry) : nullptr) return d->type;
    return MacroType::make_base(infer(ctx, e));
  }
  if (e->kind == Kind::Lambda) {
    MacroTypePtr arg = macro_type_from_expr(ctx, e->domain());
    if (arg->is_base() && !is_univ(arg->base) &&
        universe(ctx, arg->base) == Universe::Set)
      return MacroType::make_base(infer(ctx, e));
    validate_macro_type(ctx, arg);
    std::string name = e->name;
    Expr body = e->body();
    if (ctx.declares(name)) {
      std::set<std::string> taken = ctx.names();
      for (const auto& v : body->fvs) taken.insert(v);
      name = fresh_name(name, taken);
      body = substitute(body, e->name, var(name));
    }
    MacroTypePtr res = macro_type_of(push_param(ctx, name, arg), body);
    return MacroType::make_arrow(name, arg, res);
  }
  if (e->kind == Kind::MacroApp) {
    MacroTypePtr mt = macro_type_of(ctx, e->kids[0]);
    for (std::size_t i = 1; i < e->kids.size(); ++i) {
      if (mt->is_base())
        fail(Reason::ArityMismatch, e,
             fmt::format("too many arguments to '{}'", print(e->kids[0])));
      check_macro_arg(ctx, e->kids[i], mt->arg);
      mt = substitute(mt->result, mt->binder, e->kids[i]);
    }
    return mt;
  }
  return MacroType::make_base(infer(ctx, e));
}

Context extend(const Context& ctx, Entry entry) {
  std::string_view name = entry_name(entry);
  if (!name.empty() && ctx.declares(name))
    throw TypeError(Reason::DuplicateDeclaration,
                    fmt::format("'{}' is already declared", name));
  if (auto* d = std::get_if<Decl>(&entry)) {
    universe(ctx, d->type);
  } else if (auto* a = std::get_if<Assume>(&entry)) {
    check_bool(ctx, a->formula);
  } else if (auto* m = std::get_if<MacroDecl>(&entry)) {
    validate_macro_type(ctx, m->type);
  } else if (auto* d = std::get_if<Define>(&entry)) {
    if (!d->type) *d = make_define(ctx, d->def);
  }
  return ctx.push(std::move(entry));
}

Context check_context(const std::vector<Entry>& entries) {
  Context ctx;
  for (const auto& e : entries) ctx = extend(ctx, e);
  return ctx;
}

SetCaseVerdict classify_set(const Context& ctx, const Expr& s) {
  if (universe(ctx, s) != Universe::Set)
    fail(Reason::NotASet, s, fmt::format("'{}' is not a set", print(s)));
  Expr t = expand(ctx, s);
  for (;;) {
    switch (t->kind) {
      case Kind::BoolSort:
        return {};
      case Kind::Subset:
        t = t->domain();
        continue;
      case Kind::IdSet:
        t = expand(ctx, id_carrier(ctx, t->kids[0], t->kids[1], t->kids[2]));
        continue;
      case Kind::Sigma:
      case Kind::Pi: {
        SetCaseVerdict v;
        v.kind = t->kind == Kind::Sigma ? SetCaseVerdict::Case::Sigma
                                        : SetCaseVerdict::Case::Pi;
        v.binder = t->name;
        v.u = t->domain();
        v.w = t->body();
        return v;
      }
      case Kind::Var:
      case Kind::Proj: {
        SetCaseVerdict v;
        v.kind = SetCaseVerdict::Case::Point;
        Expr r = t;
        while (r->kind == Kind::Proj) {
          v.path.push_back(r->index);
          r = r->kids[0];
        }
        const Decl* d = r->kind == Kind::Var ? ctx.find_decl(r->name) : nullptr;
        bool rooted = d != nullptr && d->type->kind != Kind::UnivClass &&
                      universe(ctx, d->type) == Universe::Class;
        if (!rooted)
          fail(Reason::ClassifyFailure, s,
               fmt::format("sort '{}' is not rooted at a class-typed variable",
                           print(t)));
        v.root = r->name;
        return v;
      }
      default:
        fail(Reason::ClassifyFailure, s,
             fmt::format("set expression '{}' fits no case", print(t)));
    }
  }
}

bool is_point(const Context& ctx, const Expr& e) {
  Expr t = infer(ctx, e);
  if (is_univ(t) || universe(ctx, t) != Universe::Set) return false;
  return classify_set(ctx, t).kind == SetCaseVerdict::Case::Point;
}

}  // namespace btt
