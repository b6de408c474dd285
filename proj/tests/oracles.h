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


// Brute-force reference implementations used by the tests. They work on
// values directly and share no code with the library's transport or
// isomorphism search.

#ifndef BTT_TESTS_ORACLES_H_
#define BTT_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "btt/sanorm.h"
#include "btt/syntax.h"
#include "btt/value.h"

namespace oracle {

using btt::Value;

// Simple types over one sort.
struct Ty;
using TyPtr = std::shared_ptr<const Ty>;
struct Ty {
  enum class K { Sort, Bool, Prod, Arrow };
  K k;
  TyPtr l, r;
};

inline TyPtr sort() { return std::make_shared<Ty>(Ty{Ty::K::Sort, nullptr, nullptr}); }
inline TyPtr boolean() { return std::make_shared<Ty>(Ty{Ty::K::Bool, nullptr, nullptr}); }
inline TyPtr prod(TyPtr a, TyPtr b) {
  return std::make_shared<Ty>(Ty{Ty::K::Prod, std::move(a), std::move(b)});
}
inline TyPtr arrow(TyPtr a, TyPtr b) {
  return std::make_shared<Ty>(Ty{Ty::K::Arrow, std::move(a), std::move(b)});
}

inline int depth(const TyPtr& t) {
  if (t->k == Ty::K::Sort || t->k == Ty::K::Bool) return 1;
  return 1 + std::max(depth(t->l), depth(t->r));
}

// Every type of depth at most d.
inline std::vector<TyPtr> all_types(int d) {
  std::vector<TyPtr> out = {sort(), boolean()};
  for (int i = 2; i <= d; ++i) {
    std::vector<TyPtr> prev = out;
    out = {sort(), boolean()};
    for (const auto& a : prev)
      for (const auto& b : prev) {
        out.push_back(prod(a, b));
        out.push_back(arrow(a, b));
      }
  }
  return out;
}

inline btt::Expr to_expr(const TyPtr& t, const btt::Expr& sort_var) {
  switch (t->k) {
    case Ty::K::Sort: return sort_var;
    case Ty::K::Bool: return btt::bool_sort();
    case Ty::K::Prod: return btt::product(to_expr(t->l, sort_var), to_expr(t->r, sort_var));
    case Ty::K::Arrow: return btt::arrow(to_expr(t->l, sort_var), to_expr(t->r, sort_var));
  }
  return nullptr;
}

// Number of inhabitants over a carrier of size n, or nullopt past cap.
inline std::optional<std::size_t> count(const TyPtr& t, std::size_t n, std::size_t cap) {
  switch (t->k) {
    case Ty::K::Sort: return n;
    case Ty::K::Bool: return 2;
    case Ty::K::Prod: {
      auto a = count(t->l, n, cap), b = count(t->r, n, cap);
      if (!a || !b || (*a != 0 && *b > cap / *a)) return std::nullopt;
      return *a * *b;
    }
    case Ty::K::Arrow: {
      auto a = count(t->l, n, cap), b = count(t->r, n, cap);
      if (!a || !b) return std::nullopt;
      std::size_t total = 1;
      for (std::size_t i = 0; i < *a; ++i) {
        if (*b != 0 && total > cap / *b) return std::nullopt;
        total *= *b;
      }
      return total;
    }
  }
  return std::nullopt;
}

inline std::vector<Value> inhabitants(const TyPtr& t, const std::vector<Value>& carrier) {
  switch (t->k) {
    case Ty::K::Sort: return carrier;
    case Ty::K::Bool: return {Value::boolean(false), Value::boolean(true)};
    case Ty::K::Prod: {
      std::vector<Value> out;
      for (const auto& a : inhabitants(t->l, carrier))
        for (const auto& b : inhabitants(t->r, carrier)) out.push_back(Value::pair(a, b));
      return out;
    }
    case Ty::K::Arrow: {
      std::vector<Value> dom = inhabitants(t->l, carrier);
      std::vector<Value> cod = inhabitants(t->r, carrier);
      std::vector<Value> out;
      if (cod.empty() && !dom.empty()) return out;
      std::vector<std::size_t> digit(dom.size(), 0);
      while (true) {
        std::vector<std::pair<Value, Value>> rows;
        for (std::size_t i = 0; i < dom.size(); ++i) rows.emplace_back(dom[i], cod[digit[i]]);
        out.push_back(Value::fun(std::move(rows)));
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == cod.size()) digit[i++] = 0;
        if (i == digit.size()) break;
      }
      return out;
    }
  }
  return {};
}

using Map = std::map<Value, Value>;

inline Map as_map(const Value& f) {
  Map m;
  for (const auto& [a, b] : f.table()) m.emplace(a, b);
  return m;
}

// The structure carried by x, moved along the sort bijection f.
inline Value move(const TyPtr& t, const Map& f, const Value& x) {
  switch (t->k) {
    case Ty::K::Sort: return f.at(x);
    case Ty::K::Bool: return x;
    case Ty::K::Prod: return Value::pair(move(t->l, f, x.first()), move(t->r, f, x.second()));
    case Ty::K::Arrow: {
      std::vector<std::pair<Value, Value>> rows;
      for (const auto& [a, b] : x.table())
        rows.emplace_back(move(t->l, f, a), move(t->r, f, b));
      return Value::fun(std::move(rows));
    }
  }
  return x;
}

// Every bijection between two equal-size carriers.
inline std::vector<Value> bijections(const std::vector<Value>& from,
                                     const std::vector<Value>& to) {
  std::vector<Value> out;
  if (from.size() != to.size()) return out;
  std::vector<std::size_t> perm(to.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::vector<std::pair<Value, Value>> rows;
    for (std::size_t i = 0; i < from.size(); ++i) rows.emplace_back(from[i], to[perm[i]]);
    out.push_back(Value::fun(std::move(rows)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Isomorphisms between one-sort structures <A, X> and <B, Y> of signature t.
inline std::set<Value> isomorphisms(const TyPtr& t, const Value& n, const Value& m) {
  std::set<Value> out;
  for (const auto& f : bijections(n.first().elements(), m.first().elements()))
    if (move(t, as_map(f), n.second()) == m.second()) out.insert(f);
  return out;
}

inline std::vector<Value> atoms(const std::string& prefix, std::size_t n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Value::atom(prefix + std::to_string(i)));
  return out;
}

}  // namespace oracle

#endif  // BTT_TESTS_ORACLES_H_
