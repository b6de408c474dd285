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

#include "btt/sanorm.h"

#include <functional>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "btt/errors.h"
#include "btt/macros.h"
#include "btt/typecheck.h"

namespace btt {

namespace {

using Functor = std::function<Expr(const Expr&)>;

struct Normal {
  std::size_t n = 1;
  std::string alpha;
  std::string x;
  Expr s;
  Expr phi;
  Functor to;
  Functor from;
};

class Normalizer {
 public:
  Normalizer(const Context& ctx, const Expr& cls) : taken_(ctx.names()) {
    collect_names(cls, taken_);
  }

  std::string fresh(std::string_view base) {
    std::string n = fresh_name(base, taken_);
    taken_.insert(n);
    return n;
  }

  Normal run(const Context& ctx, const Expr& cls) {
    Expr c = expand(ctx, cls);
    switch (c->kind) {
      case Kind::UnivSet:
        return set_case();
      case Kind::Subset:
        return subclass_case(ctx, c);
      case Kind::Sigma:
        if (auto fast = sa_shape(ctx, c)) return *fast;
        return sigma_case(ctx, c);
      default:
        throw UnsupportedClass(
            fmt::format("class '{}' has no signature-axiom form", print(c)),
            c->span);
    }
  }

 private:
  Normal set_case() {
    Normal r;
    r.alpha = fresh("a");
    r.x = fresh("P");
    r.s = bool_sort();
    r.phi = var(r.x);
    r.to = [](const Expr& n) { return pair(n, bool_lit(true)); };
    r.from = [](const Expr& s) { return proj(1, s); };
    return r;
  }

  // Sigma(alpha : Set^k) body with body a set: already in normal form.
  std::optional<Normal> sa_shape(const Context& ctx, const Expr& c) {
    std::size_t k = 0;
    for (std::size_t i = 1; i <= 8; ++i) {
      if (alpha_eq(c->domain(), set_power(i))) k = i;
    }
    if (k == 0) return std::nullopt;
    Context inner = ctx.push(Decl{c->name, c->domain()});
    Expr body = c->body();
    Expr bt = infer_type(inner, body);
    if (bt->kind != Kind::UnivSet) return std::nullopt;
    Normal r;
    r.n = k;
    r.alpha = c->name;
    if (body->kind == Kind::Subset) {
      r.x = body->name;
      r.s = body->domain();
      r.phi = body->body();
    } else {
      r.x = fresh("x");
      r.s = body;
      r.phi = bool_lit(true);
    }
    r.to = [](const Expr& n) { return n; };
    r.from = [](const Expr& s) { return s; };
    return r;
  }

  Normal subclass_case(const Context& ctx, const Expr& c) {
    Normal t = run(ctx, c->domain());
    Expr recovered = t.from(pair(var(t.alpha), var(t.x)));
    t.phi = conj(t.phi, substitute(c->body(), c->name, recovered));
    return t;
  }

  Normal sigma_case(const Context& ctx, const Expr& c) {
    Universe dom = universe_of(ctx, c->domain());
    std::string xb = c->name;
    Expr body = c->body();
    if (xb == kVacuous || ctx.declares(xb)) {
      std::string renamed = fresh(xb == kVacuous ? "y" : xb);
      body = substitute(body, xb, var(renamed));
      xb = renamed;
    }
    Context inner = ctx.push(Decl{xb, c->domain()});
    Universe cod = universe_of(inner, body);
    if (dom == Universe::Class && cod == Universe::Set)
      return class_set(ctx, c->domain(), xb, body);
    if (dom == Universe::Set && cod == Universe::Class)
      return set_class(ctx, inner, c->domain(), xb, body);
    return class_class(ctx, inner, c->domain(), xb, body);
  }

  Normal class_set(const Context& ctx, const Expr& tau, const std::string& xb,
                   const Expr& gamma) {
    Normal t = run(ctx, tau);
    Normal r;
    r.n = t.n;
    r.alpha = t.alpha;
    r.x = fresh("z");
    Expr recovered = t.from(pair(var(t.alpha), var(t.x)));
    r.s = sigma(t.x, t.s, substitute(gamma, xb, recovered));
    r.phi = substitute(t.phi, t.x, proj(1, var(r.x)));
    Functor tto = t.to, tfrom = t.from;
    r.to = [tto](const Expr& n) {
      Expr w = tto(proj(1, n));
      return pair(proj(1, w), pair(proj(2, w), proj(2, n)));
    };
    r.from = [tfrom](const Expr& s) {
      return pair(tfrom(pair(proj(1, s), proj(1, proj(2, s)))),
                  proj(2, proj(2, s)));
    };
    return r;
  }

  Normal set_class(const Context& /*ctx*/, const Context& inner,
                   const Expr& tau, const std::string& xb, const Expr& gamma) {
    Normal g = run(inner, gamma);
    Normal r;
    r.n = g.n;
    r.alpha = g.alpha;
    r.x = fresh("z");
    r.s = sigma(xb, tau, g.s);
    // Both substitutions at once through a temporary name.
    std::string tmp = fresh("t");
    Expr phi = substitute(g.phi, g.x, var(tmp));
    phi = substitute(phi, xb, proj(1, var(r.x)));
    r.phi = substitute(phi, tmp, proj(2, var(r.x)));
    Functor gto = g.to, gfrom = g.from;
    r.to = [gto, xb](const Expr& n) {
      Expr w = substitute(gto(proj(2, n)), xb, proj(1, n));
      return pair(proj(1, w), pair(proj(1, n), proj(2, w)));
    };
    r.from = [gfrom, xb](const Expr& s) {
      Expr first = proj(1, proj(2, s));
      Expr inst = gfrom(pair(proj(1, s), proj(2, proj(2, s))));
      return pair(first, substitute(inst, xb, first));
    };
    return r;
  }

  Normal class_class(const Context& ctx, const Context& inner, const Expr& tau,
                     const std::string& xb, const Expr& gamma) {
    Normal t = run(ctx, tau);
    Normal g = run(inner, gamma);
    std::size_t n = t.n, m = g.n, nm = n + m;
    Normal r;
    r.n = nm;
    r.alpha = fresh("e");
    r.x = fresh("z");
    Expr eta = var(r.alpha);
    auto front = [n, nm](const Expr& e) {
      std::vector<Expr> items;
      for (std::size_t i = 0; i < n; ++i) items.push_back(sort_expr(e, i, nm));
      return tuple_expr(items);
    };
    auto back = [n, nm](const Expr& e) {
      std::vector<Expr> items;
      for (std::size_t i = n; i < nm; ++i) items.push_back(sort_expr(e, i, nm));
      return tuple_expr(items);
    };
    Expr a = front(eta), b = back(eta);
    Functor tfrom = t.from, tto = t.to, gfrom = g.from, gto = g.to;

    std::string w = fresh("w");
    Expr x_of_w = tfrom(pair(a, var(w)));
    Expr s2 = substitute(substitute(g.s, xb, x_of_w), g.alpha, b);
    r.s = sigma(w, substitute(t.s, t.alpha, a), s2);

    Expr z1 = proj(1, var(r.x)), z2 = proj(2, var(r.x));
    Expr phi1 = substitute(substitute(t.phi, t.x, z1), t.alpha, a);
    std::string tmp = fresh("t");
    Expr phi2 = substitute(g.phi, g.x, var(tmp));
    phi2 = substitute(phi2, xb, tfrom(pair(a, z1)));
    phi2 = substitute(phi2, g.alpha, b);
    phi2 = substitute(phi2, tmp, z2);
    r.phi = conj(phi1, phi2);

    r.to = [tto, gto, xb, n, m](const Expr& nn) {
      Expr w1 = tto(proj(1, nn));
      Expr w2 = substitute(gto(proj(2, nn)), xb, proj(1, nn));
      std::vector<Expr> sorts;
      for (std::size_t i = 0; i < n; ++i) sorts.push_back(sort_expr(proj(1, w1), i, n));
      for (std::size_t i = 0; i < m; ++i) sorts.push_back(sort_expr(proj(1, w2), i, m));
      return pair(tuple_expr(sorts), pair(proj(2, w1), proj(2, w2)));
    };
    r.from = [tfrom, gfrom, xb, front, back](const Expr& s) {
      Expr first = tfrom(pair(front(proj(1, s)), proj(1, proj(2, s))));
      Expr second = gfrom(pair(back(proj(1, s)), proj(2, proj(2, s))));
      return pair(first, substitute(second, xb, first));
    };
    return r;
  }

  std::set<std::string> taken_;
};

std::optional<Expr> rewrite_root(const Expr& e, std::set<std::string>& taken) {
  if (e->kind == Kind::Sigma && e->domain()->kind == Kind::Subset &&
      e->body()->kind == Kind::Subset &&
      !occurs_free(e->body()->domain(), e->name)) {
    const Expr& dom = e->domain();
    const Expr& body = e->body();
    std::string p = fresh_name("p", taken);
    taken.insert(p);
    Expr phi = substitute(dom->body(), dom->name, proj(1, var(p)));
    std::string tmp = fresh_name("t", taken);
    taken.insert(tmp);
    Expr psi = substitute(body->body(), body->name, var(tmp));
    psi = substitute(psi, e->name, proj(1, var(p)));
    psi = substitute(psi, tmp, proj(2, var(p)));
    return subset(p, product(dom->domain(), body->domain()), and_(phi, psi));
  }
  if (e->kind == Kind::Pi && e->body()->kind == Kind::Subset &&
      !occurs_free(e->body()->domain(), e->name)) {
    const Expr& body = e->body();
    std::string f = fresh_name("f", taken);
    taken.insert(f);
    Expr phi = substitute(body->body(), body->name, app(var(f), var(e->name)));
    return subset(f, arrow(e->domain(), body->domain()),
                  forall(e->name, e->domain(), phi));
  }
  return std::nullopt;
}

std::optional<Expr> rewrite_once(const Expr& e, std::set<std::string>& taken) {
  if (auto r = rewrite_root(e, taken)) return r;
  for (std::size_t i = 0; i < e->kids.size(); ++i) {
    if (auto r = rewrite_once(e->kids[i], taken)) {
      std::vector<Expr> kids = e->kids;
      kids[i] = *r;
      return with_kids(e, std::move(kids));
    }
  }
  return std::nullopt;
}

}  // namespace

Expr set_power(std::size_t n) {
  Expr out = univ_set();
  for (std::size_t i = 1; i < n; ++i) out = product(univ_set(), out);
  return out;
}

Expr sort_expr(const Expr& t, std::size_t i, std::size_t n) {
  Expr cur = t;
  for (std::size_t k = 0; k < i; ++k) cur = proj(2, cur);
  if (i + 1 < n) cur = proj(1, cur);
  return cur;
}

Expr tuple_expr(const std::vector<Expr>& items) {
  if (items.empty()) return bool_lit(true);
  Expr out = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) out = pair(items[i], out);
  return out;
}

Expr SAClass::signature_macro() const {
  return lambda(alpha, set_power(sort_count), signature);
}

Expr SAClass::axioms_macro() const {
  return lambda(alpha, set_power(sort_count), lambda(x, signature, axioms));
}

SAClass sa_normalize(const Context& ctx, const Expr& cls) {
  if (universe_of(ctx, cls) != Universe::Class)
    throw TypeError(Reason::NotAClass,
                    fmt::format("'{}' is not a class", print(cls)), cls->span);
  Normalizer norm(ctx, cls);
  Normal r = norm.run(ctx, cls);

  SAClass sa;
  sa.sort_count = r.n;
  sa.alpha = r.alpha;
  sa.x = r.x;
  sa.signature = expand(ctx, r.s);
  sa.axioms = expand(ctx, r.phi);

  std::string n = norm.fresh("N");
  sa.to_sa.name = "SA";
  sa.to_sa.params = {{n, MacroType::make_base(cls)}};
  sa.to_sa.body = expand(ctx, r.to(var(n)));
  std::string s = norm.fresh("S");
  sa.from_sa.name = "SAinv";
  sa.from_sa.params = {{s, MacroType::make_base(rebuild_class(sa))}};
  sa.from_sa.body = expand(ctx, r.from(var(s)));
  return sa;
}

Expr rebuild_class(const SAClass& sa) {
  Expr body = is_true_lit(sa.axioms) ? sa.signature
                                     : subset(sa.x, sa.signature, sa.axioms);
  return sigma(sa.alpha, set_power(sa.sort_count), body);
}

Expr simplify_signature(const Context& ctx, const Expr& s) {
  std::set<std::string> taken = ctx.names();
  collect_names(s, taken);
  Expr cur = s;
  std::size_t guard = 0;
  while (auto next = rewrite_once(cur, taken)) {
    cur = *next;
    if (++guard > 100000) throw InternalError("signature simplification diverged");
  }
  return cur;
}

Expr id_carrier(const Context& ctx, const Expr& cls, const Expr& n,
                const Expr& m) {
  SAClass sa = sa_normalize(ctx, cls);
  Expr sn = proj(1, apply_def(ctx, sa.to_sa, {n}));
  Expr sm = proj(1, apply_def(ctx, sa.to_sa, {m}));
  std::vector<Expr> parts;
  for (std::size_t i = 0; i < sa.sort_count; ++i)
    parts.push_back(arrow(sort_expr(sn, i, sa.sort_count),
                          sort_expr(sm, i, sa.sort_count)));
  Expr out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = product(parts[i], out);
  return expand(ctx, out);
}

}  // namespace btt
