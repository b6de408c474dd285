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

#include "btt/semantics.h"

#include <optional>

#include <fmt/format.h>

#include "btt/errors.h"
#include "btt/macros.h"
#include "btt/transport.h"

namespace btt {

namespace {

class Evaluator {
 public:
  Evaluator(const Context& ctx, const FiniteModel& model, const Bindings& locals)
      : ctx_(ctx), model_(model) {
    for (const auto& [k, v] : locals) env_.push_back({k, v, nullptr});
  }

  Value eval(const Expr& e) {
    switch (e->kind) {
      case Kind::UnivSet:
      case Kind::UnivClass:
        throw EvalError(EvalFailure::ClassNotEnumerable,
                        "a class is too large to be a set", e->span);
      case Kind::BoolSort:
        return Value::set({Value::boolean(false), Value::boolean(true)});
      case Kind::BoolLit:
        return Value::boolean(e->index == 1);
      case Kind::Var:
        return lookup(e);
      case Kind::Sigma: {
        Value dom = set_of(e->domain());
        std::vector<Value> out;
        for (const auto& d : dom.elements()) {
          Scope sc(*this, e, d);
          Value body = set_of(e->body());
          for (const auto& b : body.elements()) out.push_back(Value::pair(d, b));
        }
        return Value::set(std::move(out));
      }
      case Kind::Pi:
        return function_space(e);
      case Kind::Subset: {
        Value dom = set_of(e->domain());
        std::vector<Value> out;
        for (const auto& d : dom.elements()) {
          Scope sc(*this, e, d);
          if (truth(e->body())) out.push_back(d);
        }
        return Value::set(std::move(out));
      }
      case Kind::Pair:
        return Value::pair(eval(e->left()), eval(e->right()));
      case Kind::Proj: {
        Value p = eval(e->kids[0]);
        if (!p.is(Tag::Pair))
          throw EvalError(EvalFailure::DomainError,
                          fmt::format("projection of non-pair {}", p.str()), e->span);
        return e->index == 1 ? p.first() : p.second();
      }
      case Kind::Lambda: {
        Value dom = set_of(e->domain());
        std::vector<std::pair<Value, Value>> rows;
        for (const auto& d : dom.elements()) {
          Scope sc(*this, e, d);
          rows.emplace_back(d, eval(e->body()));
        }
        return Value::fun(std::move(rows));
      }
      case Kind::App: {
        Value fn = eval(e->left());
        Value arg = eval(e->right());
        if (!fn.is(Tag::Fun))
          throw EvalError(EvalFailure::DomainError,
                          fmt::format("application of non-function {}", fn.str()),
                          e->span);
        auto r = fn.apply(arg);
        if (!r)
          throw EvalError(EvalFailure::DomainError,
                          fmt::format("{} is outside the function's domain", arg.str()),
                          e->span);
        return *r;
      }
      case Kind::SetEq:
        return Value::boolean(eval(e->left()) == eval(e->right()));
      case Kind::IsoEq:
        return Value::boolean(decide_iso(scoped_ctx(), e->kids[0], eval(e->kids[1]),
                                         eval(e->kids[2]), scoped_model()));
      case Kind::IdSet: {
        IsoSet iso = id_set(scoped_ctx(), e->kids[0], eval(e->kids[1]),
                            eval(e->kids[2]), scoped_model());
        std::vector<Value> out;
        for (const auto& w : iso.witnesses) out.push_back(tuple_value(w));
        return Value::set(std::move(out));
      }
      case Kind::Forall:
      case Kind::Exists: {
        bool all = e->kind == Kind::Forall;
        Value dom = set_of(e->domain());
        for (const auto& d : dom.elements()) {
          Scope sc(*this, e, d);
          if (truth(e->body()) != all) return Value::boolean(!all);
        }
        return Value::boolean(all);
      }
      case Kind::Not:
        return Value::boolean(!truth(e->kids[0]));
      case Kind::Or:
        return Value::boolean(truth(e->kids[0]) || truth(e->kids[1]));
      case Kind::And:
        return Value::boolean(truth(e->kids[0]) && truth(e->kids[1]));
      case Kind::Implies:
        return Value::boolean(!truth(e->kids[0]) || truth(e->kids[1]));
      case Kind::Iff:
        return Value::boolean(truth(e->kids[0]) == truth(e->kids[1]));
      case Kind::The: {
        Value dom = set_of(e->domain());
        std::vector<Value> hits;
        for (const auto& d : dom.elements()) {
          Scope sc(*this, e, d);
          if (truth(e->body())) hits.push_back(d);
        }
        if (hits.size() != 1)
          throw EvalError(EvalFailure::TheFailure,
                          fmt::format("The found {} witnesses, expected exactly one",
                                      hits.size()),
                          e->span);
        return hits.front();
      }
      case Kind::MacroApp:
        throw EvalError(EvalFailure::UnboundVariable,
                        fmt::format("macro '{}' has no definition", print(e->kids[0])),
                        e->span);
    }
    throw InternalError("unknown construct in evaluator");
  }

  bool inhabits(const Value& v, const Expr& type) {
    switch (type->kind) {
      case Kind::UnivSet:
        return v.is(Tag::Set);
      case Kind::UnivClass:
        return false;
      case Kind::BoolSort:
        return v.is(Tag::Bool);
      case Kind::Sigma: {
        if (!v.is(Tag::Pair) || !inhabits(v.first(), type->domain())) return false;
        Scope sc(*this, type, v.first());
        return inhabits(v.second(), type->body());
      }
      case Kind::Subset: {
        if (!inhabits(v, type->domain())) return false;
        Scope sc(*this, type, v);
        return truth(type->body());
      }
      case Kind::Pi: {
        if (!v.is(Tag::Fun)) return false;
        Value dom = set_of(type->domain());
        if (v.domain() != dom.elements()) return false;
        for (const auto& [k, r] : v.table()) {
          Scope sc(*this, type, k);
          if (!inhabits(r, type->body())) return false;
        }
        return true;
      }
      default:
        return set_of(type).contains(v);
    }
  }

 private:
  struct Slot {
    std::string name;
    Value value;
    Expr binder;  // the binding construct, null for caller-supplied locals
  };

  struct Scope {
    Scope(Evaluator& ev, const Expr& binder, const Value& v) : ev(ev) {
      ev.env_.push_back({binder->name, v, binder});
    }
    ~Scope() { ev.env_.pop_back(); }
    Evaluator& ev;
  };

  Value lookup(const Expr& e) {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->name == e->name) return it->value;
    auto it = model_.assignment.find(e->name);
    if (it != model_.assignment.end()) return it->second;
    throw EvalError(EvalFailure::UnboundVariable,
                    fmt::format("'{}' has no value in the model", e->name), e->span);
  }

  Value set_of(const Expr& e) {
    Value v = eval(e);
    if (!v.is(Tag::Set))
      throw EvalError(EvalFailure::DomainError,
                      fmt::format("'{}' does not denote a set", print(e)), e->span);
    return v;
  }

  bool truth(const Expr& e) {
    Value v = eval(e);
    if (!v.is(Tag::Bool))
      throw EvalError(EvalFailure::DomainError,
                      fmt::format("'{}' does not denote a truth value", print(e)),
                      e->span);
    return v.as_bool();
  }

  Value function_space(const Expr& e) {
    Value dom = set_of(e->domain());
    std::vector<Value> args = dom.elements();
    std::vector<std::vector<Value>> cods;
    std::size_t total = 1;
    for (const auto& d : args) {
      Scope sc(*this, e, d);
      cods.push_back(set_of(e->body()).elements());
      std::size_t k = cods.back().size();
      if (k == 0) return Value::set({});
      if (total > model_.budget / k)
        throw EvalError(EvalFailure::BudgetExceeded,
                        fmt::format("function set '{}' exceeds the budget of {}",
                                    print(e), model_.budget),
                        e->span);
      total *= k;
    }
    std::vector<Value> out;
    out.reserve(total);
    std::vector<std::size_t> idx(args.size(), 0);
    for (;;) {
      std::vector<std::pair<Value, Value>> rows;
      for (std::size_t i = 0; i < args.size(); ++i) rows.emplace_back(args[i], cods[i][idx[i]]);
      out.push_back(Value::fun(std::move(rows)));
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == cods[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    return Value::set(std::move(out));
  }

  Context scoped_ctx() const {
    Context c = ctx_;
    for (const auto& slot : env_) {
      if (slot.binder && slot.name != kVacuous && !c.declares(slot.name))
        c = c.push(Decl{slot.name, slot.binder->domain()});
    }
    return c;
  }

  FiniteModel scoped_model() const {
    FiniteModel m = model_;
    for (const auto& slot : env_) m.assignment[slot.name] = slot.value;
    return m;
  }

  Context ctx_;
  const FiniteModel& model_;
  std::vector<Slot> env_;
};

}  // namespace

Value eval_expanded(const Context& ctx, const FiniteModel& model, const Expr& e,
                    const Bindings& locals) {
  Evaluator ev(ctx, model, locals);
  return ev.eval(e);
}

Value eval(const Context& ctx, const FiniteModel& model, const Expr& e,
           const Bindings& locals) {
  return eval_expanded(ctx, model, expand(ctx, e), locals);
}

bool check_inhabits(const Value& v, const Context& ctx, const FiniteModel& model,
                    const Expr& type, const Bindings& locals) {
  Evaluator ev(ctx, model, locals);
  return ev.inhabits(v, expand(ctx, type));
}

}  // namespace btt
