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

#include "btt/syntax.h"

#include <algorithm>
#include <iterator>
#include <utility>

namespace btt {

namespace {

std::vector<std::string> merge_fvs(const Node& n) {
  std::vector<std::string> out;
  auto add = [&](const std::vector<std::string>& src, const std::string* drop) {
    std::vector<std::string> merged;
    merged.reserve(out.size() + src.size());
    if (drop == nullptr) {
      std::set_union(out.begin(), out.end(), src.begin(), src.end(),
                     std::back_inserter(merged));
    } else {
      std::vector<std::string> filtered;
      filtered.reserve(src.size());
      for (const auto& s : src)
        if (s != *drop) filtered.push_back(s);
      std::set_union(out.begin(), out.end(), filtered.begin(), filtered.end(),
                     std::back_inserter(merged));
    }
    out = std::move(merged);
  };
  if (n.kind == Kind::Var) return {n.name};
  if (n.is_binder()) {
    add(n.kids[0]->fvs, nullptr);
    add(n.kids[1]->fvs, &n.name);
    return out;
  }
  for (const auto& k : n.kids) add(k->fvs, nullptr);
  return out;
}

Expr make(Kind kind, std::string name, int index, std::vector<Expr> kids,
          SourceSpan span) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->index = index;
  n->kids = std::move(kids);
  n->span = std::move(span);
  n->fvs = merge_fvs(*n);
  for (const auto& k : n->kids) n->count += k->count;
  return n;
}

Expr leaf(Kind kind, SourceSpan span) {
  return make(kind, "", 0, {}, std::move(span));
}

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::UnivSet: return "UnivSet";
    case Kind::UnivClass: return "UnivClass";
    case Kind::BoolSort: return "BoolSort";
    case Kind::BoolLit: return "BoolLit";
    case Kind::Var: return "Var";
    case Kind::Sigma: return "Sigma";
    case Kind::Pair: return "Pair";
    case Kind::Proj: return "Proj";
    case Kind::Pi: return "Pi";
    case Kind::Lambda: return "Lambda";
    case Kind::App: return "App";
    case Kind::Subset: return "Subset";
    case Kind::SetEq: return "SetEq";
    case Kind::IsoEq: return "IsoEq";
    case Kind::Forall: return "Forall";
    case Kind::Exists: return "Exists";
    case Kind::Not: return "Not";
    case Kind::Or: return "Or";
    case Kind::And: return "And";
    case Kind::Implies: return "Implies";
    case Kind::Iff: return "Iff";
    case Kind::The: return "The";
    case Kind::MacroApp: return "MacroApp";
    case Kind::IdSet: return "IdSet";
  }
  return "?";
}

bool Node::is_binder() const {
  switch (kind) {
    case Kind::Sigma:
    case Kind::Pi:
    case Kind::Lambda:
    case Kind::Subset:
    case Kind::Forall:
    case Kind::Exists:
    case Kind::The:
      return true;
    default:
      return false;
  }
}

Expr univ_set(SourceSpan span) { return leaf(Kind::UnivSet, std::move(span)); }
Expr univ_class(SourceSpan span) {
  return leaf(Kind::UnivClass, std::move(span));
}
Expr bool_sort(SourceSpan span) { return leaf(Kind::BoolSort, std::move(span)); }
Expr bool_lit(bool value, SourceSpan span) {
  return make(Kind::BoolLit, "", value ? 1 : 0, {}, std::move(span));
}
Expr var(std::string name, SourceSpan span) {
  return make(Kind::Var, std::move(name), 0, {}, std::move(span));
}
Expr sigma(std::string x, Expr domain, Expr body, SourceSpan span) {
  return make(Kind::Sigma, std::move(x), 0, {std::move(domain), std::move(body)},
              std::move(span));
}
Expr product(Expr left, Expr right, SourceSpan span) {
  return sigma(std::string(kVacuous), std::move(left), std::move(right),
               std::move(span));
}
Expr pair(Expr left, Expr right, SourceSpan span) {
  return make(Kind::Pair, "", 0, {std::move(left), std::move(right)},
              std::move(span));
}
Expr proj(int index, Expr target, SourceSpan span) {
  return make(Kind::Proj, "", index, {std::move(target)}, std::move(span));
}
Expr pi(std::string x, Expr domain, Expr body, SourceSpan span) {
  return make(Kind::Pi, std::move(x), 0, {std::move(domain), std::move(body)},
              std::move(span));
}
Expr arrow(Expr domain, Expr codomain, SourceSpan span) {
  return pi(std::string(kVacuous), std::move(domain), std::move(codomain),
            std::move(span));
}
Expr lambda(std::string x, Expr domain, Expr body, SourceSpan span) {
  return make(Kind::Lambda, std::move(x), 0, {std::move(domain), std::move(body)},
              std::move(span));
}
Expr app(Expr fn, Expr arg, SourceSpan span) {
  return make(Kind::App, "", 0, {std::move(fn), std::move(arg)},
              std::move(span));
}
Expr subset(std::string x, Expr domain, Expr formula, SourceSpan span) {
  return make(Kind::Subset, std::move(x), 0,
              {std::move(domain), std::move(formula)}, std::move(span));
}
Expr set_eq(Expr left, Expr right, SourceSpan span) {
  return make(Kind::SetEq, "", 0, {std::move(left), std::move(right)},
              std::move(span));
}
Expr iso_eq(Expr cls, Expr left, Expr right, SourceSpan span) {
  return make(Kind::IsoEq, "", 0,
              {std::move(cls), std::move(left), std::move(right)},
              std::move(span));
}
Expr forall(std::string x, Expr domain, Expr formula, SourceSpan span) {
  return make(Kind::Forall, std::move(x), 0,
              {std::move(domain), std::move(formula)}, std::move(span));
}
Expr exists(std::string x, Expr domain, Expr formula, SourceSpan span) {
  return make(Kind::Exists, std::move(x), 0,
              {std::move(domain), std::move(formula)}, std::move(span));
}
Expr not_(Expr f, SourceSpan span) {
  return make(Kind::Not, "", 0, {std::move(f)}, std::move(span));
}
Expr or_(Expr f, Expr g, SourceSpan span) {
  return make(Kind::Or, "", 0, {std::move(f), std::move(g)}, std::move(span));
}
Expr and_(Expr f, Expr g, SourceSpan span) {
  return make(Kind::And, "", 0, {std::move(f), std::move(g)}, std::move(span));
}
Expr implies(Expr f, Expr g, SourceSpan span) {
  return make(Kind::Implies, "", 0, {std::move(f), std::move(g)},
              std::move(span));
}
Expr iff(Expr f, Expr g, SourceSpan span) {
  return make(Kind::Iff, "", 0, {std::move(f), std::move(g)}, std::move(span));
}
Expr the(std::string x, Expr domain, Expr formula, SourceSpan span) {
  return make(Kind::The, std::move(x), 0,
              {std::move(domain), std::move(formula)}, std::move(span));
}
Expr macro_app(Expr head, std::vector<Expr> args, SourceSpan span) {
  std::vector<Expr> kids;
  kids.reserve(args.size() + 1);
  kids.push_back(std::move(head));
  for (auto& a : args) kids.push_back(std::move(a));
  return make(Kind::MacroApp, "", 0, std::move(kids), std::move(span));
}
Expr id_set(Expr cls, Expr left, Expr right, SourceSpan span) {
  return make(Kind::IdSet, "", 0,
              {std::move(cls), std::move(left), std::move(right)},
              std::move(span));
}

bool is_true_lit(const Expr& e) {
  return e->kind == Kind::BoolLit && e->index == 1;
}

Expr conj(Expr f, Expr g) {
  if (is_true_lit(f)) return g;
  if (is_true_lit(g)) return f;
  return and_(std::move(f), std::move(g));
}

Expr with_kids(const Expr& e, std::vector<Expr> kids) {
  bool same = kids.size() == e->kids.size();
  for (std::size_t i = 0; same && i < kids.size(); ++i)
    same = kids[i] == e->kids[i];
  if (same) return e;
  return make(e->kind, e->name, e->index, std::move(kids), e->span);
}

Expr with_binder(const Expr& e, std::string name, Expr domain, Expr body) {
  if (name == e->name && domain == e->kids[0] && body == e->kids[1]) return e;
  return make(e->kind, std::move(name), e->index,
              {std::move(domain), std::move(body)}, e->span);
}

std::set<std::string> free_vars(const Expr& e) {
  return {e->fvs.begin(), e->fvs.end()};
}

bool occurs_free(const Expr& e, std::string_view x) {
  return std::binary_search(e->fvs.begin(), e->fvs.end(), x,
                            [](const auto& a, const auto& b) {
                              return std::string_view(a) < std::string_view(b);
                            });
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (!e->name.empty()) out.insert(e->name);
  for (const auto& k : e->kids) collect_names(k, out);
}

std::string fresh_name(std::string_view base,
                       const std::set<std::string>& taken) {
  std::string name(base);
  if (name.empty() || name == kVacuous) name = "v";
  while (taken.count(name)) name += '\'';
  return name;
}

namespace {

Expr subst_impl(const Expr& e, std::string_view x, const Expr& r) {
  if (!occurs_free(e, x)) return e;
  if (e->kind == Kind::Var) return r;
  if (e->is_binder()) {
    Expr dom = subst_impl(e->kids[0], x, r);
    Expr body = e->kids[1];
    std::string name = e->name;
    if (name == x) return with_binder(e, name, dom, body);
    if (occurs_free(body, x) && occurs_free(r, name)) {
      std::set<std::string> taken = free_vars(r);
      for (const auto& v : body->fvs) taken.insert(v);
      taken.insert(std::string(x));
      std::string renamed = fresh_name(name, taken);
      body = subst_impl(body, name, var(renamed));
      name = renamed;
    }
    body = subst_impl(body, x, r);
    return with_binder(e, std::move(name), std::move(dom), std::move(body));
  }
  std::vector<Expr> kids;
  kids.reserve(e->kids.size());
  for (const auto& k : e->kids) kids.push_back(subst_impl(k, x, r));
  return with_kids(e, std::move(kids));
}

using AlphaEnv = std::vector<std::pair<std::string_view, std::string_view>>;

bool alpha_impl(const Expr& a, const Expr& b, AlphaEnv& env) {
  if (a->kind != b->kind || a->index != b->index ||
      a->kids.size() != b->kids.size())
    return false;
  if (a->kind == Kind::Var) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      bool ha = it->first == a->name;
      bool hb = it->second == b->name;
      if (ha || hb) return ha && hb;
    }
    return a->name == b->name;
  }
  if (a->is_binder()) {
    if (!alpha_impl(a->kids[0], b->kids[0], env)) return false;
    env.emplace_back(a->name, b->name);
    bool ok = alpha_impl(a->kids[1], b->kids[1], env);
    env.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!alpha_impl(a->kids[i], b->kids[i], env)) return false;
  return true;
}

Expr uniquify_impl(const Expr& e, std::set<std::string>& scope,
                   const std::set<std::string>& all_names) {
  if (e->is_binder()) {
    Expr dom = uniquify_impl(e->kids[0], scope, all_names);
    Expr body = e->kids[1];
    std::string name = e->name;
    if (!occurs_free(body, name)) {
      body = uniquify_impl(body, scope, all_names);
      return with_binder(e, name, dom, body);
    }
    if (scope.count(name)) {
      std::set<std::string> taken = all_names;
      taken.insert(scope.begin(), scope.end());
      std::string renamed = fresh_name(name, taken);
      body = substitute(body, name, var(renamed));
      name = renamed;
    }
    scope.insert(name);
    body = uniquify_impl(body, scope, all_names);
    scope.erase(name);
    return with_binder(e, name, dom, body);
  }
  std::vector<Expr> kids;
  for (const auto& k : e->kids) kids.push_back(uniquify_impl(k, scope, all_names));
  return with_kids(e, std::move(kids));
}

bool is_atomic(const Expr& e) {
  switch (e->kind) {
    case Kind::UnivSet:
    case Kind::UnivClass:
    case Kind::BoolSort:
    case Kind::BoolLit:
    case Kind::Var:
    case Kind::Pair:
    case Kind::Proj:
    case Kind::App:
    case Kind::MacroApp:
    case Kind::IdSet:
      return true;
    default:
      return false;
  }
}

void print_impl(const Expr& e, std::string& out);

void operand(const Expr& e, std::string& out) {
  if (is_atomic(e)) {
    print_impl(e, out);
  } else {
    out += '(';
    print_impl(e, out);
    out += ')';
  }
}

void binder_form(std::string_view keyword, const Expr& e, std::string& out) {
  out += keyword;
  out += '(';
  out += e->name;
  out += " : ";
  print_impl(e->kids[0], out);
  out += ") ";
  print_impl(e->kids[1], out);
}

void infix(const Expr& e, std::string_view op, std::string& out) {
  operand(e->kids[0], out);
  out += op;
  operand(e->kids[1], out);
}

void print_impl(const Expr& e, std::string& out) {
  switch (e->kind) {
    case Kind::UnivSet: out += "Set"; return;
    case Kind::UnivClass: out += "Class"; return;
    case Kind::BoolSort: out += "Bool"; return;
    case Kind::BoolLit: out += e->index ? "True" : "False"; return;
    case Kind::Var: out += e->name; return;
    case Kind::Sigma:
      if (!occurs_free(e->kids[1], e->name)) return infix(e, " * ", out);
      return binder_form("Sigma", e, out);
    case Kind::Pi:
      if (!occurs_free(e->kids[1], e->name)) return infix(e, " -> ", out);
      return binder_form("Pi", e, out);
    case Kind::Lambda: return binder_form("Lambda", e, out);
    case Kind::Subset: return binder_form("S", e, out);
    case Kind::Forall: return binder_form("Forall", e, out);
    case Kind::Exists: return binder_form("Exists", e, out);
    case Kind::The: return binder_form("The", e, out);
    case Kind::Pair:
      out += '<';
      print_impl(e->kids[0], out);
      out += ", ";
      print_impl(e->kids[1], out);
      out += '>';
      return;
    case Kind::Proj:
      operand(e->kids[0], out);
      out += e->index == 1 ? ".1" : ".2";
      return;
    case Kind::App:
      operand(e->kids[0], out);
      out += '(';
      print_impl(e->kids[1], out);
      out += ')';
      return;
    case Kind::MacroApp:
      operand(e->kids[0], out);
      out += '[';
      for (std::size_t i = 1; i < e->kids.size(); ++i) {
        if (i > 1) out += ", ";
        print_impl(e->kids[i], out);
      }
      out += ']';
      return;
    case Kind::IdSet:
      out += "Id[";
      print_impl(e->kids[0], out);
      out += "](";
      print_impl(e->kids[1], out);
      out += ", ";
      print_impl(e->kids[2], out);
      out += ')';
      return;
    case Kind::SetEq: return infix(e, " = ", out);
    case Kind::IsoEq:
      operand(e->kids[1], out);
      out += " =[";
      print_impl(e->kids[0], out);
      out += "]= ";
      operand(e->kids[2], out);
      return;
    case Kind::Not:
      out += '!';
      operand(e->kids[0], out);
      return;
    case Kind::Or: return infix(e, " \\/ ", out);
    case Kind::And: return infix(e, " /\\ ", out);
    case Kind::Implies: return infix(e, " => ", out);
    case Kind::Iff: return infix(e, " <=> ", out);
  }
}

}  // namespace

Expr substitute(const Expr& e, std::string_view x, const Expr& replacement) {
  return subst_impl(e, x, replacement);
}

bool alpha_eq(const Expr& a, const Expr& b) {
  if (a == b) return true;
  AlphaEnv env;
  return alpha_impl(a, b, env);
}

std::size_t size(const Expr& e) { return e->count; }

Expr uniquify_binders(const Expr& e) {
  std::set<std::string> scope = free_vars(e);
  std::set<std::string> all;
  collect_names(e, all);
  return uniquify_impl(e, scope, all);
}

std::string print(const Expr& e) {
  std::string out;
  print_impl(e, out);
  return out;
}

}  // namespace btt
