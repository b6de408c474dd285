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

#ifndef BTT_SANORM_H_
#define BTT_SANORM_H_

#include <cstddef>
#include <string>
#include <vector>

#include "btt/context.h"
#include "btt/syntax.h"

namespace btt {

// Sigma(alpha : Set^n) S(x : signature) axioms, with the functors into and
// out of that form.
struct SAClass {
  std::size_t sort_count = 1;
  std::string alpha;
  std::string x;
  Expr signature;  // free in alpha
  Expr axioms;     // free in alpha and x
  MacroDef to_sa;
  MacroDef from_sa;

  Expr signature_macro() const;  // Lambda(alpha : Set^n) signature
  Expr axioms_macro() const;     // Lambda(alpha : Set^n) Lambda(x : signature) axioms
};

SAClass sa_normalize(const Context& ctx, const Expr& cls);
Expr rebuild_class(const SAClass& sa);

Expr simplify_signature(const Context& ctx, const Expr& s);

// Set, Set * Set, Set * (Set * Set), ...
Expr set_power(std::size_t n);
// The i-th (0-based) component of an n-tuple in right-nested encoding.
Expr sort_expr(const Expr& t, std::size_t i, std::size_t n);
Expr tuple_expr(const std::vector<Expr>& items);

// The set of sort-wise functions that contains id(cls, n, m).
Expr id_carrier(const Context& ctx, const Expr& cls, const Expr& n,
                const Expr& m);

}  // namespace btt

#endif  // BTT_SANORM_H_
