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
#include "btt/macros.h"
#include "btt/parser.h"
#include "btt/sanorm.h"
#include "btt/semantics.h"
#include "btt/source_file.h"
#include "btt/typecheck.h"

namespace btt {
namespace {

const char* kText = R"(
def Group := Sigma(a : Set) S(x : a * ((a -> a) * ((a * a) -> a)))
  Forall(u : a) x.2.2(<x.1, u>) = u
def Graph := Sigma(a : Set) (a * a) -> Bool
defmacro K : Class
var b : Set
)";

Context ctx() { return parse_source(kText, "<test>").ctx; }

TEST_CASE("powers of Set and their projections") {
  CHECK(alpha_eq(set_power(1), parse("Set")));
  CHECK(alpha_eq(set_power(3), parse("Set * (Set * Set)")));
  Expr t = var("t");
  CHECK(alpha_eq(sort_expr(t, 0, 1), t));
  CHECK(alpha_eq(sort_expr(t, 0, 3), parse("t.1")));
  CHECK(alpha_eq(sort_expr(t, 1, 3), parse("t.2.1")));
  CHECK(alpha_eq(sort_expr(t, 2, 3), parse("t.2.2")));
  CHECK(alpha_eq(tuple_expr({var("p"), var("q"), var("r")}), parse("<p, <q, r>>")));
}

TEST_CASE("a class already in signature-axiom form keeps its parts") {
  Context c = ctx();
  SAClass sa = sa_normalize(c, parse("Group"));
  CHECK(sa.sort_count == 1);
  CHECK(alpha_eq(substitute(sa.signature, sa.alpha, var("q")),
                 parse("q * ((q -> q) * ((q * q) -> q))")));
  Expr rebuilt = rebuild_class(sa);
  CHECK(alpha_eq(rebuilt, expand(c, parse("Group"))));
  SAClass g = sa_normalize(c, parse("Graph"));
  CHECK(is_true_lit(g.axioms));
}

TEST_CASE("the normal form of a class is itself a class") {
  Context c = ctx();
  for (const char* text : {"Set", "Set * Set", "Group", "Sigma(G : Group) G.1 -> Bool",
                           "Sigma(a : Set) Sigma(c : Set) a -> c", "S(G : Graph) G.2 = G.2",
                           "Sigma(p : Bool) Graph", "Group * Graph", "Sigma(a : Set) a -> b"}) {
    CAPTURE(text);
    SAClass sa = sa_normalize(c, parse(text));
    CHECK(check_type(c, rebuild_class(sa)).kind == TypeVerdict::Kind::IsClass);
    CHECK(sa.to_sa.params.size() == 1);
    CHECK(sa.from_sa.params.size() == 1);
  }
  CHECK(sa_normalize(c, parse("Group * Graph")).sort_count == 2);
  CHECK(sa_normalize(c, parse("Set * (Set * Set)")).sort_count == 3);
  CHECK(sa_normalize(c, parse("Sigma(a : Set) a -> b")).sort_count == 1);
}

TEST_CASE("classes without a normal form are rejected") {
  Context c = ctx();
  CHECK_THROWS_AS(sa_normalize(c, parse("K")), UnsupportedClass);
}

TEST_CASE("simplification merges subsets under sigma and pi") {
  Context c = ctx();
  Expr a = simplify_signature(c, parse("Sigma(x : S(z : b) z = z) S(y : Bool) y"));
  CHECK(alpha_eq(a, parse("S(p : b * Bool) p.1 = p.1 /\\ p.2")));
  Expr p = simplify_signature(c, parse("Pi(x : b) S(y : b) !(y = x)"));
  CHECK(alpha_eq(p, parse("S(f : b -> b) Forall(x : b) !(f(x) = x)")));
  Expr none = parse("b -> (b * Bool)");
  CHECK(alpha_eq(simplify_signature(c, none), none));
}

TEST_CASE("simplification rewrites inner occurrences until nothing applies") {
  Context c = ctx();
  Expr e = simplify_signature(
      c, parse("Pi(x : b) Sigma(u : S(v : b) v = x) S(w : Bool) w"));
  CHECK(e->kind == Kind::Subset);
  CHECK(alpha_eq(simplify_signature(c, e), e));
  CHECK(check_type(c.push(Decl{"x0", e}), parse("x0")).kind ==
        TypeVerdict::Kind::IsSetElement);
}

}  // namespace
}  // namespace btt
