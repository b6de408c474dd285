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

#include <doctest.h>

#include "btt/errors.h"
#include "btt/parser.h"
#include "btt/syntax.h"

namespace btt {
namespace {

TEST_CASE("printing a parsed expression gives text that parses to the same tree") {
  for (std::string text : {
           "Sigma(a : Set) S(x : a * (a -> a)) Forall(u : a) x.2(u) = x.1",
           "Pi(x : Bool) S(y : Bool) y = x",
           "<a, <b, c>>.2.1",
           "Forall(x : a) !(x = x) \\/ (True => False) /\\ (False <=> True)",
           "G =[Group]= H",
           "F[x, <y, z>]",
           "Lambda(x : a) The(y : a) y = x",
           "Id[Group](G, H)",
       }) {
    CAPTURE(text);
    Expr e = parse(text);
    Expr again = parse(print(e));
    CHECK(alpha_eq(e, again));
    CHECK(print(again) == print(e));
  }
}

TEST_CASE("binary operators associate and bind as documented") {
  CHECK(alpha_eq(parse("a * b * c"), parse("a * (b * c)")));
  CHECK(alpha_eq(parse("a -> b -> c"), parse("a -> (b -> c)")));
  CHECK(alpha_eq(parse("p /\\ q \\/ r"), parse("(p /\\ q) \\/ r")));
  CHECK(alpha_eq(parse("p => q => r"), parse("p => (q => r)")));
  CHECK(alpha_eq(parse("x.1.2"), parse("(x.1).2")));
  CHECK(alpha_eq(parse("f(x).1"), parse("(f(x)).1")));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse("Sigma(x : ) x", "t.btt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().file == "t.btt");
    CHECK(e.span().start_line == 1);
    CHECK(e.span().start_col == 11);
  }
  CHECK_THROWS_AS(parse("<a, b"), ParseError);
  CHECK_THROWS_AS(parse("x.3"), ParseError);
}

TEST_CASE("alpha equivalence ignores binder names only") {
  CHECK(alpha_eq(parse("Lambda(x : a) x"), parse("Lambda(y : a) y")));
  CHECK_FALSE(alpha_eq(parse("Lambda(x : a) x"), parse("Lambda(x : b) x")));
  CHECK_FALSE(alpha_eq(parse("Lambda(x : a) y"), parse("Lambda(y : a) y")));
  CHECK(alpha_eq(parse("Sigma(x : a) Sigma(y : a) x = y"),
                 parse("Sigma(u : a) Sigma(v : a) u = v")));
  CHECK_FALSE(alpha_eq(parse("Sigma(x : a) Sigma(y : a) x = y"),
                       parse("Sigma(u : a) Sigma(v : a) v = u")));
}

TEST_CASE("substitution avoids capture") {
  Expr e = parse("Forall(y : a) x = y");
  Expr r = substitute(e, "x", var("y"));
  CHECK(free_vars(r) == std::set<std::string>{"a", "y"});
  CHECK(alpha_eq(r, parse("Forall(z : a) y = z")));
  CHECK(alpha_eq(substitute(parse("Lambda(x : a) x"), "x", var("q")),
                 parse("Lambda(x : a) x")));
  CHECK(alpha_eq(substitute(parse("Sigma(x : x) x"), "x", var("b")),
                 parse("Sigma(x : b) x")));
}

TEST_CASE("free variables and sizes") {
  Expr e = parse("Sigma(x : a) S(y : b) x = y /\\ z");
  CHECK(free_vars(e) == std::set<std::string>{"a", "b", "z"});
  CHECK(occurs_free(e, "z"));
  CHECK_FALSE(occurs_free(e, "x"));
  CHECK(size(parse("<a, b>")) == 3);
}

TEST_CASE("fresh names avoid every taken name") {
  std::set<std::string> taken = {"x", "x'", "x''"};
  std::string n = fresh_name("x", taken);
  CHECK(taken.count(n) == 0);
  CHECK(n.rfind("x", 0) == 0);
}

TEST_CASE("uniquify_binders renames shadowing binders") {
  Expr src = parse("Lambda(x : a) <x, Lambda(x : a) x>");
  Expr e = uniquify_binders(src);
  CHECK(alpha_eq(e, src));
  const Expr& inner = e->body()->right();
  REQUIRE(inner->kind == Kind::Lambda);
  CHECK(inner->name != "x");
  Expr free = uniquify_binders(parse("<x, Lambda(x : a) x>"));
  CHECK(free->right()->name != "x");
}

}  // namespace
}  // namespace btt
