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

#include "btt/transport.h"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

#include "btt/errors.h"
#include "btt/macros.h"
#include "btt/sanorm.h"
#include "btt/typecheck.h"

namespace btt {

struct TransPlan {
  enum class Kind { Identity, Point, Sigma, Pi };

  Kind kind = Kind::Identity;
  std::size_t sort = 0;
  Context ctx;    // the frame context extended with x
  std::string x;  // name of the parameter bound to X
  Expr v;         // function domain, for Pi
  TransPlanPtr first;
  TransPlanPtr second;
};

namespace {

using Metric = std::pair<std::size_t, std::size_t>;

std::size_t weight(const Expr& e) {
  std::size_t n = e->kind == Kind::Proj ? 0 : 1;
  for (const auto& k : e->kids) n += weight(k);
  return n;
}

std::set<std::string> taken_names(const Context& ctx, const FiniteModel& model) {
  std::set<std::string> taken = ctx.names();
  for (const auto& [k, v] : model.assignment) taken.insert(k);
  return taken;
}

std::size_t sort_index(const std::vector<int>& path, std::size_t n) {
  if (path.empty()) return 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i] != 2) throw InternalError("sort path is not a tuple component");
  std::size_t i = path[0] == 1 ? path.size() - 1 : path.size();
  if (i >= n) throw InternalError("sort path out of range");
  return i;
}

class Compiler {
 public:
  explicit Compiler(const SortFrame& fr) : fr_(fr), taken_(taken_names(fr.ctx, fr.model)) {}

  TransPlanPtr compile(const std::string& x, const Expr& u, const Expr& s) {
    for (const auto& n : s->fvs) taken_.insert(n);
    for (const auto& n : u->fvs) taken_.insert(n);
    taken_.insert(x);
    auto plan = std::make_shared<TransPlan>();
    plan->x = x;
    plan->ctx = x == kVacuous ? fr_.ctx : fr_.ctx.push(Decl{x, u});
    Expr se = expand(plan->ctx, s);
    if (!occurs_free(se, fr_.alpha)) return plan;

    SetCaseVerdict c = classify_set(plan->ctx, se);
    if (c.kind == SetCaseVerdict::Case::Bool) return plan;
    if (c.kind == SetCaseVerdict::Case::Point) {
      if (c.root != fr_.alpha) return plan;
      plan->kind = TransPlan::Kind::Point;
      plan->sort = sort_index(c.path, fr_.n);
      return plan;
    }
    Expr carrier = c.kind == SetCaseVerdict::Case::Sigma ? sigma(c.binder, c.u, c.w)
                                                         : pi(c.binder, c.u, c.w);
    if (!occurs_free(carrier, fr_.alpha)) return plan;
    Metric here{weight(u) + weight(carrier), weight(carrier)};

    std::string xp = fresh_name(x == kVacuous ? "x" : x, taken_);
    taken_.insert(xp);
    Expr u2 = sigma(x, u, c.u);
    Expr w2 = substitute(c.w, c.binder, proj(2, var(xp)));
    if (x != kVacuous && c.binder != x) w2 = substitute(w2, x, proj(1, var(xp)));

    Metric m1{weight(u) + weight(c.u), weight(c.u)};
    Metric m2{weight(u2) + weight(w2), weight(w2)};
    if (!(m1 < here) || !(m2 < here))
      throw InternalError("transport metric does not decrease");
    plan->first = compile(x, u, c.u);
    plan->second = compile(xp, u2, w2);
    if (c.kind == SetCaseVerdict::Case::Sigma) {
      plan->kind = TransPlan::Kind::Sigma;
    } else {
      plan->kind = TransPlan::Kind::Pi;
      plan->v = expand(plan->ctx, c.u);
    }
    return plan;
  }

 private:
  const SortFrame& fr_;
  std::set<std::string> taken_;
};

Value bind_apply(const Value& f, const Value& y) {
  auto r = f.apply(y);
  if (!r)
    throw EvalError(EvalFailure::DomainError,
                    fmt::format("{} is outside the bijection's domain", y.str()));
  return *r;
}

struct Instance {
  std::vector<Value> sorts;
  Value structure;
};

Instance to_instance(const Context& ctx, const FiniteModel& model, const Expr& cls,
                     const SAClass& sa, const Value& v) {
  std::string n0 = fresh_name("n", taken_names(ctx, model));
  Context inner = ctx.push(Decl{n0, cls});
  Value s = eval(inner, model, apply_def(inner, sa.to_sa, {var(n0)}), {{n0, v}});
  if (!s.is(Tag::Pair))
    throw EvalError(EvalFailure::DomainError,
                    fmt::format("{} is not a structure of the class", v.str()));
  Instance out{untuple(s.first(), sa.sort_count), s.second()};
  for (const auto& a : out.sorts) {
    if (!a.is(Tag::Set))
      throw EvalError(EvalFailure::DomainError,
                      fmt::format("sort {} of {} is not a set", a.str(), v.str()));
  }
  return out;
}

Value structure_value(const Instance& in) {
  return Value::pair(tuple(in.sorts), in.structure);
}

double factorial(std::size_t k) {
  double r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<double>(i);
  return r;
}

std::vector<Value> bijections(const Value& from, const Value& to) {
  std::vector<Value> out;
  std::vector<Value> target = to.elements();
  const auto& src = from.elements();
  do {
    std::vector<std::pair<Value, Value>> rows;
    for (std::size_t i = 0; i < src.size(); ++i) rows.emplace_back(src[i], target[i]);
    out.push_back(Value::fun(std::move(rows)));
  } while (std::next_permutation(target.begin(), target.end()));
  return out;
}

Expr sa_set(const SAClass& sa, const std::string& alpha) {
  Expr sig = substitute(sa.signature, sa.alpha, var(alpha));
  if (is_true_lit(sa.axioms)) return sig;
  Expr phi = substitute(sa.axioms, sa.alpha, var(alpha));
  return subset(sa.x, sig, phi);
}

// Everything J' needs: the SA form, both instances, the frame and eta.
struct JSetup {
  SAClass sa;
  Expr bar;
  Instance in;
  Instance in2;
  SortFrame fr;
  std::string n0;
  Expr eta;
  Value start;  // <X, refl>
};

JSetup j_setup(const Context& ctx, const Expr& sigma_cls, const Value& n,
               const Value& n2, const BijectionTuple& f, const FiniteModel& model) {
  JSetup j;
  j.sa = sa_normalize(ctx, sigma_cls);
  j.bar = rebuild_class(j.sa);
  j.in = to_instance(ctx, model, sigma_cls, j.sa, n);
  j.in2 = to_instance(ctx, model, sigma_cls, j.sa, n2);
  j.fr = make_frame(ctx, model, j.in.sorts, j.in2.sorts, f);
  std::set<std::string> taken = taken_names(j.fr.ctx, j.fr.model);
  collect_names(j.bar, taken);
  j.n0 = fresh_name("n", taken);
  taken.insert(j.n0);
  j.fr.ctx = j.fr.ctx.push(Decl{j.n0, j.bar});
  j.fr.model.assignment[j.n0] = structure_value(j.in);
  std::string xs = fresh_name("x", taken);
  j.eta = sigma(xs, sa_set(j.sa, j.fr.alpha),
                id_set(j.bar, var(j.n0), pair(var(j.fr.alpha), var(xs))));
  j.start = Value::pair(j.in.structure, tuple_value(identity_tuple(j.in.sorts)));
  return j;
}

}  // namespace

BijectionTuple identity_tuple(const std::vector<Value>& carriers) {
  BijectionTuple out;
  for (const auto& c : carriers) out.push_back(identity_fun(c));
  return out;
}

Value tuple_value(const BijectionTuple& f) { return tuple(f); }

Value transport_simple(const Value& f, const Expr& tau, const std::string& alpha,
                       const Value& x) {
  if (!occurs_free(tau, alpha)) return x;
  switch (tau->kind) {
    case Kind::Var:
      return bind_apply(f, x);
    case Kind::Sigma:
      if (occurs_free(tau->body(), tau->name)) break;
      return Value::pair(transport_simple(f, tau->domain(), alpha, x.first()),
                         transport_simple(f, tau->body(), alpha, x.second()));
    case Kind::Pi: {
      if (occurs_free(tau->body(), tau->name)) break;
      // g'(x') = f_sigma(g(f_tau^-1(x')))
      std::vector<Value> args = x.domain();
      std::vector<Value> targets;
      for (const auto& a : args) targets.push_back(transport_simple(f, tau->domain(), alpha, a));
      std::vector<std::pair<Value, Value>> rows;
      for (const auto& t : targets) {
        auto it = std::find_if(args.begin(), args.end(), [&](const Value& a) {
          return transport_simple(f, tau->domain(), alpha, a) == t;
        });
        rows.emplace_back(t, transport_simple(f, tau->body(), alpha, bind_apply(x, *it)));
      }
      return Value::fun(std::move(rows));
    }
    default:
      break;
  }
  throw EvalError(EvalFailure::NotSimpleType,
                  fmt::format("'{}' is not a simple type over '{}'", print(tau), alpha),
                  tau->span);
}

SortFrame make_frame(const Context& ctx, const FiniteModel& model,
                     const std::vector<Value>& from, const std::vector<Value>& to,
                     const BijectionTuple& f, const std::string& alpha_hint) {
  SortFrame fr;
  fr.n = from.size();
  fr.alpha = fresh_name(alpha_hint, taken_names(ctx, model));
  fr.ctx = ctx.push(Decl{fr.alpha, set_power(fr.n)});
  fr.model = model;
  fr.from = from;
  fr.to = to;
  fr.f = f;
  return fr;
}

TransPlanPtr compile_trans(const SortFrame& fr, const std::string& x, const Expr& u,
                           const Expr& s) {
  Compiler c(fr);
  return c.compile(x, u, s);
}

Value apply_trans(const SortFrame& fr, const TransPlanPtr& plan, const Value& X,
                  const Value& y) {
  switch (plan->kind) {
    case TransPlan::Kind::Identity:
      return y;
    case TransPlan::Kind::Point:
      return bind_apply(fr.f.at(plan->sort), y);
    case TransPlan::Kind::Sigma:
      return Value::pair(apply_trans(fr, plan->first, X, y.first()),
                         apply_trans(fr, plan->second, Value::pair(X, y.first()),
                                     y.second()));
    case TransPlan::Kind::Pi: {
      Bindings locals{{fr.alpha, tuple(fr.from)}};
      if (plan->x != kVacuous) locals.emplace_back(plan->x, X);
      Value dom = eval_expanded(plan->ctx, fr.model, plan->v, locals);
      std::vector<std::pair<Value, Value>> rows;
      for (const auto& z : dom.elements()) {
        Value z2 = apply_trans(fr, plan->first, X, z);
        rows.emplace_back(z2, apply_trans(fr, plan->second, Value::pair(X, z),
                                          bind_apply(y, z)));
      }
      return Value::fun(std::move(rows));
    }
  }
  throw InternalError("unknown transport plan");
}

Value trans(const SortFrame& fr, const std::string& x, const Expr& u, const Value& X,
            const Expr& s) {
  TransPlanPtr plan = compile_trans(fr, x, u, s);
  Bindings locals{{fr.alpha, tuple(fr.from)}};
  if (x != kVacuous) locals.emplace_back(x, X);
  Value dom = eval(plan->ctx, fr.model, s, locals);
  std::vector<std::pair<Value, Value>> rows;
  for (const auto& y : dom.elements()) rows.emplace_back(y, apply_trans(fr, plan, X, y));
  return Value::fun(std::move(rows));
}

Value subst(const SortFrame& fr, const Expr& s) {
  return trans(fr, std::string(kVacuous), bool_sort(), Value::boolean(true), s);
}

Value subst_apply(const SortFrame& fr, const Expr& s, const Value& y) {
  TransPlanPtr plan = compile_trans(fr, std::string(kVacuous), bool_sort(), s);
  return apply_trans(fr, plan, Value::boolean(true), y);
}

IsoSet id_set(const Context& ctx, const Expr& cls, const Value& n, const Value& n2,
              const FiniteModel& model) {
  SAClass sa = sa_normalize(ctx, cls);
  Instance a = to_instance(ctx, model, cls, sa, n);
  Instance b = to_instance(ctx, model, cls, sa, n2);
  IsoSet out;
  double count = 1;
  std::string sizes;
  for (std::size_t i = 0; i < a.sorts.size(); ++i) {
    std::size_t k = a.sorts[i].elements().size();
    if (k != b.sorts[i].elements().size()) return out;
    count *= factorial(k);
    sizes += fmt::format("{}{}", i ? ", " : "", k);
  }
  if (count > static_cast<double>(model.budget))
    throw EvalError(EvalFailure::BudgetExceeded,
                    fmt::format("{} bijection tuples between carriers of sizes [{}] "
                                "exceed the budget of {}",
                                count, sizes, model.budget));

  std::vector<std::vector<Value>> choices;
  for (std::size_t i = 0; i < a.sorts.size(); ++i)
    choices.push_back(bijections(a.sorts[i], b.sorts[i]));

  SortFrame fr = make_frame(ctx, model, a.sorts, b.sorts, {});
  Expr sig = substitute(sa.signature, sa.alpha, var(fr.alpha));
  TransPlanPtr plan = compile_trans(fr, std::string(kVacuous), bool_sort(), sig);

  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    fr.f.clear();
    for (std::size_t i = 0; i < idx.size(); ++i) fr.f.push_back(choices[i][idx[i]]);
    if (apply_trans(fr, plan, Value::boolean(true), a.structure) == b.structure)
      out.witnesses.push_back(fr.f);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

Value transport_structure(const Context& ctx, const Expr& cls, const Value& n,
                          const BijectionTuple& f, const FiniteModel& model) {
  SAClass sa = sa_normalize(ctx, cls);
  Instance a = to_instance(ctx, model, cls, sa, n);
  if (f.size() != a.sorts.size())
    throw EvalError(EvalFailure::CarrierMismatch,
                    fmt::format("expected {} bijections, got {}", a.sorts.size(), f.size()));
  std::vector<Value> images;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Value img = Value::set(f[i].image());
    if (!is_bijection(f[i], a.sorts[i], img))
      throw EvalError(EvalFailure::CarrierMismatch,
                      fmt::format("{} is not a bijection on sort {}", f[i].str(), i));
    images.push_back(img);
  }
  SortFrame fr = make_frame(ctx, model, a.sorts, images, f);
  Expr sig = substitute(sa.signature, sa.alpha, var(fr.alpha));
  Instance moved{images, subst_apply(fr, sig, a.structure)};
  std::string m = fresh_name("S", taken_names(ctx, model));
  Context inner = ctx.push(Decl{m, rebuild_class(sa)});
  return eval(inner, model, apply_def(inner, sa.from_sa, {var(m)}),
              {{m, structure_value(moved)}});
}

bool decide_iso(const Context& ctx, const Expr& cls, const Value& n, const Value& n2,
                const FiniteModel& model) {
  return !id_set(ctx, cls, n, n2, model).empty();
}

bool is_iso_witness(const Context& ctx, const Expr& cls, const Value& n,
                    const Value& n2, const BijectionTuple& f, const FiniteModel& model) {
  SAClass sa = sa_normalize(ctx, cls);
  Instance a = to_instance(ctx, model, cls, sa, n);
  Instance b = to_instance(ctx, model, cls, sa, n2);
  if (f.size() != a.sorts.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!is_bijection(f[i], a.sorts[i], b.sorts[i])) return false;
  SortFrame fr = make_frame(ctx, model, a.sorts, b.sorts, f);
  Expr sig = substitute(sa.signature, sa.alpha, var(fr.alpha));
  return subst_apply(fr, sig, a.structure) == b.structure;
}

BijectionTuple substitute_isomorphics(const Context& ctx, const Expr& sigma_cls,
                                      const Expr& tau, const MacroDef& g,
                                      const Value& n, const Value& n2,
                                      const BijectionTuple& f_sigma,
                                      const FiniteModel& model) {
  SAClass ss = sa_normalize(ctx, sigma_cls);
  SAClass st = sa_normalize(ctx, tau);
  Instance a = to_instance(ctx, model, sigma_cls, ss, n);
  Instance b = to_instance(ctx, model, sigma_cls, ss, n2);
  SortFrame fr = make_frame(ctx, model, a.sorts, b.sorts, f_sigma);
  std::set<std::string> taken = taken_names(fr.ctx, model);
  std::string x = fresh_name("x", taken);
  Expr eta = sa_set(ss, fr.alpha);
  Context inner = fr.ctx.push(Decl{x, eta});

  Expr recovered = apply_def(inner, ss.from_sa, {pair(var(fr.alpha), var(x))});
  Expr image = apply_def(inner, st.to_sa, {apply_def(inner, g, {recovered})});
  Expr sorts = expand(inner, proj(1, image));

  BijectionTuple f_tau;
  for (std::size_t i = 0; i < st.sort_count; ++i) {
    Expr si = expand(inner, sort_expr(sorts, i, st.sort_count));
    f_tau.push_back(trans(fr, x, eta, a.structure, si));
  }

  std::string m = fresh_name("n", taken);
  Context gctx = ctx.push(Decl{m, sigma_cls});
  Expr gm = apply_def(gctx, g, {var(m)});
  Value gn = eval(gctx, model, gm, {{m, n}});
  Value gn2 = eval(gctx, model, gm, {{m, n2}});
  if (!is_iso_witness(ctx, tau, gn, gn2, f_tau, model))
    throw InternalError("transported witness is not an isomorphism of the images");
  return f_tau;
}

Value j_prime(const Context& ctx, const Expr& sigma_cls, const Value& n,
              const Value& n2, const BijectionTuple& f, const MacroDef& tau,
              const FiniteModel& model) {
  JSetup j = j_setup(ctx, sigma_cls, n, n2, f, model);
  std::set<std::string> taken = taken_names(j.fr.ctx, j.fr.model);
  collect_names(j.eta, taken);
  std::string xg = fresh_name("x", taken);
  Context inner = j.fr.ctx.push(Decl{xg, j.eta});
  Expr from_n0 = apply_def(inner, j.sa.from_sa, {var(j.n0)});
  Expr from_moved =
      apply_def(inner, j.sa.from_sa, {pair(var(j.fr.alpha), proj(1, var(xg)))});
  Expr gamma = apply_def(inner, tau, {from_n0, from_moved, proj(2, var(xg))});
  return trans(j.fr, xg, j.eta, j.start, gamma);
}

bool j_prime_coherent(const Context& ctx, const Expr& sigma_cls, const Value& n,
                      const Value& n2, const BijectionTuple& f,
                      const FiniteModel& model) {
  JSetup j = j_setup(ctx, sigma_cls, n, n2, f, model);
  Value moved = subst_apply(j.fr, j.eta, j.start);
  return moved == Value::pair(j.in2.structure, tuple_value(f));
}

Value j_operator(const Context& ctx, const Expr& sigma_cls, const Value& n,
                 const Value& n2, const BijectionTuple& f, const MacroDef& tau,
                 const MacroDef& delta, const FiniteModel& model) {
  Value table = j_prime(ctx, sigma_cls, n, n2, f, tau, model);
  std::string m = fresh_name("n", taken_names(ctx, model));
  Context inner = ctx.push(Decl{m, sigma_cls});
  Value d = eval(inner, model, apply_def(inner, delta, {var(m)}), {{m, n}});
  return bind_apply(table, d);
}

}  // namespace btt
