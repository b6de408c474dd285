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

#ifndef BTT_SYNTAX_H_
#define BTT_SYNTAX_H_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "btt/source_span.h"

namespace btt {

enum class Kind {
  UnivSet,
  UnivClass,
  BoolSort,
  BoolLit,
  Var,
  Sigma,
  Pair,
  Proj,
  Pi,
  Lambda,
  App,
  Subset,
  SetEq,
  IsoEq,
  Forall,
  Exists,
  Not,
  Or,
  And,
  Implies,
  Iff,
  The,
  MacroApp,
  // Id[sigma](N, M): the set of sigma-isomorphisms from N to M.
  IdSet,
};

std::string_view kind_name(Kind k);

struct Node;
using Expr = std::shared_ptr<const Node>;

// Immutable AST node. Layout of `kids` by kind:
//   binder forms (Sigma Pi Lambda Subset Forall Exists The): {domain, body}
//   Pair, App, SetEq, Or, And, Implies, Iff: {left, right}
//   Proj, Not: {target}
//   IsoEq, IdSet: {class, left, right}
//   MacroApp: {head, arg...}
struct Node {
  Kind kind;
  std::string name;  // variable name or binder
  int index = 0;     // projection index (1|2) or boolean literal (0|1)
  std::vector<Expr> kids;
  SourceSpan span;
  // Computed at construction.
  std::vector<std::string> fvs;  // sorted free variables
  std::size_t count = 1;         // node count

  bool is_binder() const;
  const Expr& domain() const { return kids[0]; }
  const Expr& body() const { return kids[1]; }
  const Expr& left() const { return kids[kids.size() == 3 ? 1 : 0]; }
  const Expr& right() const { return kids[kids.size() == 3 ? 2 : 1]; }
};

// Binder name used for the non-dependent forms `s * t` and `s -> t`.
inline constexpr std::string_view kVacuous = "_";

Expr univ_set(SourceSpan span = {});
Expr univ_class(SourceSpan span = {});
Expr bool_sort(SourceSpan span = {});
Expr bool_lit(bool value, SourceSpan span = {});
Expr var(std::string name, SourceSpan span = {});
Expr sigma(std::string x, Expr domain, Expr body, SourceSpan span = {});
Expr product(Expr left, Expr right, SourceSpan span = {});
Expr pair(Expr left, Expr right, SourceSpan span = {});
Expr proj(int index, Expr target, SourceSpan span = {});
Expr pi(std::string x, Expr domain, Expr body, SourceSpan span = {});
Expr arrow(Expr domain, Expr codomain, SourceSpan span = {});
Expr lambda(std::string x, Expr domain, Expr body, SourceSpan span = {});
Expr app(Expr fn, Expr arg, SourceSpan span = {});
Expr subset(std::string x, Expr domain, Expr formula, SourceSpan span = {});
Expr set_eq(Expr left, Expr right, SourceSpan span = {});
Expr iso_eq(Expr cls, Expr left, Expr right, SourceSpan span = {});
Expr forall(std::string x, Expr domain, Expr formula, SourceSpan span = {});
Expr exists(std::string x, Expr domain, Expr formula, SourceSpan span = {});
Expr not_(Expr f, SourceSpan span = {});
Expr or_(Expr f, Expr g, SourceSpan span = {});
Expr and_(Expr f, Expr g, SourceSpan span = {});
Expr implies(Expr f, Expr g, SourceSpan span = {});
Expr iff(Expr f, Expr g, SourceSpan span = {});
Expr the(std::string x, Expr domain, Expr formula, SourceSpan span = {});
Expr macro_app(Expr head, std::vector<Expr> args, SourceSpan span = {});
Expr id_set(Expr cls, Expr left, Expr right, SourceSpan span = {});

// Conjunction that drops literal `True` operands.
Expr conj(Expr f, Expr g);

// Same node with replaced children (span and name kept).
Expr with_kids(const Expr& e, std::vector<Expr> kids);
Expr with_binder(const Expr& e, std::string name, Expr domain, Expr body);

bool is_true_lit(const Expr& e);

std::set<std::string> free_vars(const Expr& e);
bool occurs_free(const Expr& e, std::string_view x);
// All names appearing anywhere in `e` (free, bound or binders).
void collect_names(const Expr& e, std::set<std::string>& out);

// Returns `base`, or `base` with primes appended, avoiding `taken`.
std::string fresh_name(std::string_view base,
                       const std::set<std::string>& taken);

// Capture-avoiding replacement of free `x` by `replacement`.
Expr substitute(const Expr& e, std::string_view x, const Expr& replacement);

bool alpha_eq(const Expr& a, const Expr& b);

// Node count.
std::size_t size(const Expr& e);

// Renames binders that shadow an enclosing binder or a free variable so that
// every binder in the tree is locally unique.
Expr uniquify_binders(const Expr& e);

// Deterministic concrete syntax; `parse(print(e))` is alpha-equivalent to e.
std::string print(const Expr& e);

}  // namespace btt

#endif  // BTT_SYNTAX_H_
