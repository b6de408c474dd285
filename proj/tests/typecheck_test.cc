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
#include "btt/source_file.h"
#include "btt/typecheck.h"

namespace btt {
namespace {

Context context_of(const std::string& text) {
  return parse_source(text, "<test>").ctx;
}

Reason reason_of(const Context& ctx, const std::string& text) {
  try {
    check_type(ctx, parse(text));
  } catch (const TypeError& e) {
    return e.reason();
  }
  FAIL("expected a type error for " << text);
  return Reason::TypeMismatch;
}

const char* kGroups = R"(
def Group := Sigma(a : Set) S(x : a * ((a -> a) * ((a * a) -> a)))
  Forall(u : a) x.2.2(<x.1, u>) = u
var a : Set
var b : Set
var x : a
var y : a
var z : b
var f : a -> a
var G : Group
var H : Group
)";

TEST_CASE("verdicts for the five kinds of well-formed expression") {
  Context ctx = context_of(kGroups);
  CHECK(check_type(ctx, parse("Set")).kind == TypeVerdict::Kind::IsClass);
  CHECK(check_type(ctx, parse("Group")).kind == TypeVerdict::Kind::IsClass);
  CHECK(check_type(ctx, parse("a")).kind == TypeVerdict::Kind::IsSet);
  CHECK(check_type(ctx, parse("a -> Bool")).kind == TypeVerdict::Kind::IsSet);
  CHECK(check_type(ctx, parse("x = y")).kind == TypeVerdict::Kind::IsBool);
  CHECK(check_type(ctx, parse("G =[Group]= H")).kind == TypeVerdict::Kind::IsBool);
  TypeVerdict v = check_type(ctx, parse("f(x)"));
  CHECK(v.kind == TypeVerdict::Kind::IsSetElement);
  CHECK(types_equal(ctx, v.type, parse("a")));
  CHECK(check_type(ctx, parse("G")).kind == TypeVerdict::Kind::IsClassElement);
  CHECK(check_type(ctx, parse("G.1")).kind == TypeVerdict::Kind::IsSet);
  CHECK(check_type(ctx, parse("G.2.1")).kind == TypeVerdict::Kind::IsSetElement);
}

TEST_CASE("ill-formed expressions report their reason") {
  Context ctx = context_of(kGroups);
  CHECK(reason_of(ctx, "x = z") == Reason::EqualityAcrossSorts);
  CHECK(reason_of(ctx, "a = b") == Reason::SetEqOnClassElements);
  CHECK(reason_of(ctx, "G = H") == Reason::SetEqOnClassElements);
  CHECK(reason_of(ctx, "Group -> Bool") == Reason::PiOverClass);
  CHECK(reason_of(ctx, "a -> Set") == Reason::PiOverClass);
  CHECK(reason_of(ctx, "w") == Reason::UnboundVariable);
  CHECK(reason_of(ctx, "Forall(u : a) u") == Reason::NotBool);
  CHECK(reason_of(ctx, "x.1") == Reason::NotAPair);
  CHECK(reason_of(ctx, "x(y)") == Reason::NotAFunction);
  CHECK(reason_of(ctx, "f(z)") == Reason::TypeMismatch);
}

TEST_CASE("subset elements compare with elements of the underlying set") {
  Context ctx = context_of(std::string(kGroups) + "var s : S(u : a) u = x\n");
  CHECK(check_type(ctx, parse("s = y")).kind == TypeVerdict::Kind::IsBool);
  CHECK(check_type(ctx, parse("f(s) = y")).kind == TypeVerdict::Kind::IsBool);
  CHECK(reason_of(ctx, "s = z") == Reason::EqualityAcrossSorts);
}

TEST_CASE("dependent pairs check against both signatures") {
  Context ctx = context_of(kGroups);
  check_has_type(ctx, parse("<a, x>"), parse("Sigma(c : Set) c"));
  check_has_type(ctx, parse("<a, x>"), parse("Set * a"));
  CHECK_THROWS_AS(check_has_type(ctx, parse("<b, x>"), parse("Sigma(c : Set) c")),
                  TypeError);
}

TEST_CASE("declarations are checked as they enter the context") {
  CHECK_THROWS_AS(context_of("var a : Set\nvar a : Set\n"), TypeError);
  CHECK_THROWS_AS(context_of("var x : a\n"), TypeError);
  CHECK_THROWS_AS(context_of("var a : Set\nassume a\n"), TypeError);
  CHECK_NOTHROW(context_of("var a : Set\nvar x : a\nassume x = x\n"));
}

TEST_CASE("set classification") {
  Context ctx = context_of(kGroups);
  CHECK(classify_set(ctx, parse("Bool")).kind == SetCaseVerdict::Case::Bool);
  SetCaseVerdict p = classify_set(ctx, parse("a"));
  CHECK(p.kind == SetCaseVerdict::Case::Point);
  CHECK(p.root == "a");
  SetCaseVerdict q = classify_set(ctx, parse("G.1"));
  CHECK(q.kind == SetCaseVerdict::Case::Point);
  CHECK(q.root == "G");
  CHECK(q.path == std::vector<int>{1});
  SetCaseVerdict s = classify_set(ctx, parse("Sigma(u : a) S(v : a) u = v"));
  CHECK(s.kind == SetCaseVerdict::Case::Sigma);
  CHECK(classify_set(ctx, parse("a -> Bool")).kind == SetCaseVerdict::Case::Pi);
  CHECK(classify_set(ctx, parse("S(u : a -> a) u = f")).kind == SetCaseVerdict::Case::Pi);
}

TEST_CASE("points are elements of sorts") {
  Context ctx = context_of(kGroups + std::string("var g : G.1\n"));
  CHECK(is_point(ctx, parse("x")));
  CHECK(is_point(ctx, parse("f(x)")));
  CHECK(is_point(ctx, parse("g")));
  CHECK(is_point(ctx, parse("G.2.1")));
  CHECK_FALSE(is_point(ctx, parse("f")));
  CHECK_FALSE(is_point(ctx, parse("<x, y>")));
  CHECK_FALSE(is_point(ctx, parse("True")));
}

}  // namespace
}  // namespace btt
