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

#ifndef BTT_TRANSPORT_H_
#define BTT_TRANSPORT_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "btt/context.h"
#include "btt/semantics.h"
#include "btt/syntax.h"
#include "btt/value.h"

namespace btt {

// f_i : A_i -> A'_i, one bijection per sort.
using BijectionTuple = std::vector<Value>;

struct IsoSet {
  std::vector<BijectionTuple> witnesses;  // sorted, duplicate-free

  bool empty() const { return witnesses.empty(); }
  std::size_t size() const { return witnesses.size(); }
};

BijectionTuple identity_tuple(const std::vector<Value>& carriers);
Value tuple_value(const BijectionTuple& f);

// Transport of x : tau[A] along f for a simple type over the single sort
// variable `alpha`, by the equations for Bool, the sort, products and
// function sets. Throws NotSimpleType on dependent types.
Value transport_simple(const Value& f, const Expr& tau, const std::string& alpha,
                       const Value& x);

// Sorts alpha : Set^n interpreted as A, moved to A' along f.
struct SortFrame {
  Context ctx;  // declares alpha
  FiniteModel model;
  std::string alpha;
  std::size_t n = 1;
  std::vector<Value> from;
  std::vector<Value> to;
  BijectionTuple f;
};

SortFrame make_frame(const Context& ctx, const FiniteModel& model,
                     const std::vector<Value>& from, const std::vector<Value>& to,
                     const BijectionTuple& f, const std::string& alpha_hint = "alpha");

// A transport recipe for s[alpha, x] with x : u[alpha], compiled once by
// case analysis on s and then applied pointwise.
struct TransPlan;
using TransPlanPtr = std::shared_ptr<const TransPlan>;

TransPlanPtr compile_trans(const SortFrame& fr, const std::string& x,
                           const Expr& u, const Expr& s);
Value apply_trans(const SortFrame& fr, const TransPlanPtr& plan, const Value& X,
                  const Value& y);

// Trans(f, u, X, s) as a table over s[A, X].
Value trans(const SortFrame& fr, const std::string& x, const Expr& u,
            const Value& X, const Expr& s);
// Subst(f, s) = Trans(f, Bool, True, s), as a table over s[A].
Value subst(const SortFrame& fr, const Expr& s);
Value subst_apply(const SortFrame& fr, const Expr& s, const Value& y);

// <A', X'> with A'_i the image of f_i and X' = Subst(f, s)(X), converted
// back from signature-axiom form.
Value transport_structure(const Context& ctx, const Expr& cls, const Value& n,
                          const BijectionTuple& f, const FiniteModel& model);

// Instances converted to signature-axiom form.
struct SAInstance {
  std::vector<Value> sorts;
  Value structure;
};

IsoSet id_set(const Context& ctx, const Expr& cls, const Value& n,
              const Value& n2, const FiniteModel& model);
bool decide_iso(const Context& ctx, const Expr& cls, const Value& n,
                const Value& n2, const FiniteModel& model);
bool is_iso_witness(const Context& ctx, const Expr& cls, const Value& n,
                    const Value& n2, const BijectionTuple& f,
                    const FiniteModel& model);

// f_tau for g[N] =_tau g[N'] built from f_sigma in id(sigma, N, N').
BijectionTuple substitute_isomorphics(const Context& ctx, const Expr& sigma,
                                      const Expr& tau, const MacroDef& g,
                                      const Value& n, const Value& n2,
                                      const BijectionTuple& f_sigma,
                                      const FiniteModel& model);

// J'(sigma, N, N', f, tau) as a table from tau[N, N, refl] to tau[N, N', f];
// tau takes (n, n', g).
Value j_prime(const Context& ctx, const Expr& sigma, const Value& n,
              const Value& n2, const BijectionTuple& f, const MacroDef& tau,
              const FiniteModel& model);
// Subst(f, eta)(<X, refl>) = <X', f>.
bool j_prime_coherent(const Context& ctx, const Expr& sigma, const Value& n,
                      const Value& n2, const BijectionTuple& f,
                      const FiniteModel& model);
Value j_operator(const Context& ctx, const Expr& sigma, const Value& n,
                 const Value& n2, const BijectionTuple& f, const MacroDef& tau,
                 const MacroDef& delta, const FiniteModel& model);

}  // namespace btt

#endif  // BTT_TRANSPORT_H_
