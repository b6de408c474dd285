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


#include <string>
#include <vector>

#include <doctest.h>

#include "btt/errors.h"
#include "btt/parser.h"
#include "btt/semantics.h"
#include "btt/source_file.h"
#include "oracles.h"

namespace btt {
namespace {

Value a(const std::string& n) { return Value::atom(n); }

TEST_CASE("sets are sorted and duplicate-free") {
  Value s = Value::set({a("c"), a("a"), a("b"), a("a")});
  REQUIRE(s.elements().size() == 3);
  CHECK(s.elements()[0] == a("a"));
  CHECK(s.contains(a("b")));
  CHECK_FALSE(s.contains(a("d")));
  CHECK(s == Value::set({a("b"), a("c"), a("a")}));
}

TEST_CASE("tags are disjoint") {
  CHECK_FALSE(Value::boolean(true) == a("true"));
  CHECK_FALSE(Value::set({}) == Value::fun({}));
  CHECK(Value::fun({{a("x"), Value::boolean(true)}}).is(Tag::Fun));
}

TEST_CASE("function tables") {
  Value f = Value::fun({{a("y"), a("q")}, {a("x"), a("p")}});
  CHECK(f.apply(a("x")) == a("p"));
  CHECK_FALSE(f.apply(a("z")).has_value());
  CHECK(f.domain() == std::vector<Value>{a("x"), a("y")});
  CHECK_THROWS_AS(Value::fun({{a("x"), a("p")}, {a("x"), a("q")}}), EvalError);
  Value g = Value::fun({{a("p"), a("x")}, {a("q"), a("y")}});
  Value from = Value::set({a("x"), a("y")}), to = Value::set({a("p"), a("q")});
  CHECK(is_bijection(f, from, to));
  CHECK_FALSE(is_bijection(Value::fun({{a("x"), a("p")}, {a("y"), a("p")}}), from, to));
  CHECK(inverse(f) == g);
  CHECK(compose(g, f) == identity_fun(from));
}

TEST_CASE("tuples nest to the right") {
  std::vector<Value> items = {a("x"), a("y"), a("z")};
  Value t = tuple(items);
  CHECK(t == Value::pair(a("x"), Value::pair(a("y"), a("z"))));
  CHECK(untuple(t, 3) == items);
  CHECK(tuple({a("x")}) == a("x"));
}

TEST_CASE("value literals print and parse back") {
  for (const char* text : {"true", "a0", "<a, <b, false>>", "{}", "{a, b}",
                           "fun { a -> <b, c>, b -> {c} }", "fun { }"}) {
    CAPTURE(text);
    Value v = parse_value(text);
    CHECK(parse_value(v.str()) == v);
  }
  CHECK(parse_value("fun { x -> y }").str() == "fun { x -> y }");
}

struct Fixture {
  Context ctx;
  FiniteModel model;
  Fixture() {
    SourceFile sf = parse_source(R"(
var a : Set
var x : a
let a = {a0, a1, a2}
let x = a1
)", "<test>");
    ctx = sf.ctx;
    model = sf.model;
  }
  Value ev(const std::string& text) { return eval(ctx, model, parse(text)); }
};

TEST_CASE("quantifiers, subsets and definite descriptions") {
  Fixture f;
  CHECK(f.ev("Forall(y : a) Exists(z : a) !(z = y)").as_bool());
  CHECK_FALSE(f.ev("Exists(y : a) Forall(z : a) z = y").as_bool());
  CHECK(f.ev("S(y : a) !(y = x)") == Value::set({a("a0"), a("a2")}));
  CHECK(f.ev("The(y : a) y = x") == a("a1"));
  CHECK_THROWS_AS(f.ev("The(y : a) !(y = x)"), EvalError);
  CHECK(f.ev("(Lambda(y : a) <y, x>)(x)") == Value::pair(a("a1"), a("a1")));
}

TEST_CASE("function spaces and sigma sets have the sizes of a direct count") {
  Fixture f;
  std::vector<Value> carrier = oracle::atoms("a", 3);
  using oracle::arrow;
  using oracle::boolean;
  using oracle::prod;
  using oracle::sort;
  for (const auto& t : {arrow(sort(), boolean()), arrow(prod(sort(), boolean()), sort()),
                        prod(arrow(boolean(), sort()), sort()), arrow(sort(), sort())}) {
    Expr e = oracle::to_expr(t, var("a"));
    CAPTURE(print(e));
    std::vector<Value> want = oracle::inhabitants(t, carrier);
    CHECK(eval(f.ctx, f.model, e) == Value::set(want));
  }
  CHECK(f.ev("Sigma(y : a) S(z : a) !(z = y)").elements().size() == 6);
}

TEST_CASE("enumeration limits") {
  Fixture f;
  CHECK_THROWS_AS(f.ev("Set"), EvalError);
  f.model.budget = 100;
  try {
    f.ev("(a * a) -> a");
    FAIL("expected the budget to be exceeded");
  } catch (const EvalError& e) {
    CHECK(e.failure() == EvalFailure::BudgetExceeded);
  }
  CHECK(f.ev("a -> a").elements().size() == 27);
}

TEST_CASE("isomorphism of bare sets is equality of size") {
  SourceFile sf = parse_source(R"(
var a : Set
var b : Set
var c : Set
let a = {a0, a1}
let b = {b0, b1}
let c = {c0}
)", "<test>");
  CHECK(eval(sf.ctx, sf.model, parse("a =[Set]= b")).as_bool());
  CHECK_FALSE(eval(sf.ctx, sf.model, parse("a =[Set]= c")).as_bool());
}

TEST_CASE("bindings are checked against declarations") {
  CHECK_THROWS_AS(parse_source("var a : Set\nvar x : a\nlet a = {a0}\nlet x = b0\n", "<t>"),
                  EvalError);
  CHECK_THROWS_AS(parse_source("var a : Set\nlet a = a0\n", "<t>"), EvalError);
  CHECK_NOTHROW(parse_source("var a : Set\nvar x : a\nlet a = {a0}\nlet x = a0\n", "<t>"));
  SourceFile sf = parse_source("var a : Set\nvar f : a -> a\nlet a = {p, q}\n", "<t>");
  CHECK(check_inhabits(parse_value("fun { p -> q, q -> q }"), sf.ctx, sf.model,
                       parse("a -> a")));
  CHECK_FALSE(check_inhabits(parse_value("fun { p -> q }"), sf.ctx, sf.model,
                             parse("a -> a")));
}

TEST_CASE("assumptions over bound variables must hold") {
  const char* text = "var a : Set\nvar x : a\nvar y : a\nassume !(x = y)\n";
  SourceFile sf = parse_source(text, "<t>");
  CHECK_THROWS_AS(parse_model("let a = {p}\nlet x = p\nlet y = p\n", "<m>", sf.ctx),
                  EvalError);
  CHECK_NOTHROW(parse_model("let a = {p, q}\nlet x = p\nlet y = q\n", "<m>", sf.ctx));
}

}  // namespace
}  // namespace btt
