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
#include "btt/semantics.h"
#include "btt/source_file.h"
#include "btt/typecheck.h"

namespace btt {
namespace {

const char* kText = R"(
def Group := Sigma(a : Set) S(x : a * ((a -> a) * ((a * a) -> a)))
  Forall(u : a) x.2.2(<x.1, u>) = u
def Magma := Sigma(a : Set) (a * a) -> a
def Pointed := Sigma(a : Set) a
def Forget(G : Group) := <G.1, G.2.2.2>
def Apply(F : Group -> Magma, G : Group) := F[G]
def Op(M : Magma, u : M.1, v : M.1) := M.2(<u, v>)
def Swap(p : Pointed * Set) := <p.2, p.1>
def Unswap(p : Set * Pointed) := <p.2, p.1>
def Dup(p : Set * Set) := <p.1, p.1>
var G : Group
var a : Set
var y : a
)";

Context ctx() { return parse_source(kText, "<test>").ctx; }

TEST_CASE("macro application expands by substitution") {
  Context c = ctx();
  CHECK(alpha_eq(expand(c, parse("Forget[G]")), parse("<G.1, G.2.2.2>")));
  CHECK(alpha_eq(expand(c, parse("Apply[Forget, G]")), parse("<G.1, G.2.2.2>")));
  CHECK(alpha_eq(expand(c, parse("Op[Forget[G], G.2.1, G.2.1]")),
                 parse("G.2.2.2(<G.2.1, G.2.1>)")));
  CHECK(alpha_eq(expand(c, parse("Forget[G].1")), parse("G.1")));
}

TEST_CASE("expansion reduces set-level redexes") {
  Context c = ctx();
  CHECK(alpha_eq(expand(c, parse("(Lambda(x : a) <x, x>)(y)")), parse("<y, y>")));
  CHECK(alpha_eq(expand(c, parse("<y, a>.1")), parse("y")));
}

TEST_CASE("macro types are inferred from definitions") {
  Context c = ctx();
  const Define* f = c.find_define("Forget");
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->type->is_base());
  CHECK(f->type->arg->is_base());
  const Define* ap = c.find_define("Apply");
  REQUIRE(ap != nullptr);
  CHECK_FALSE(ap->type->arg->is_base());
  CHECK(macro_type_of(c, parse("Forget[G]"))->is_base());
}

TEST_CASE("misapplied macros are type errors") {
  Context c = ctx();
  auto reason = [&](const std::string& text) {
    try {
      check_type(c, parse(text));
    } catch (const TypeError& e) {
      return e.reason();
    }
    FAIL("expected a type error for " << text);
    return Reason::TypeMismatch;
  };
  CHECK(reason("Forget") == Reason::MacroMisuse);
  CHECK(reason("Op[Forget[G]]") == Reason::MacroMisuse);
  CHECK(reason("Forget[G, G]") == Reason::ArityMismatch);
  CHECK(reason("Forget[a]") == Reason::TypeMismatch);
  CHECK(reason("Apply[Op, G]") == Reason::TypeMismatch);
}

TEST_CASE("apply_def checks arity") {
  Context c = ctx();
  const Define* f = c.find_define("Forget");
  REQUIRE(f != nullptr);
  CHECK(alpha_eq(apply_def(c, f->def, {var("G")}), parse("<G.1, G.2.2.2>")));
  CHECK_THROWS_AS(apply_def(c, f->def, {}), TypeError);
}

TEST_CASE("cryptomorphism roundtrips are checked on instances") {
  Context c = ctx();
  FiniteModel m;
  m.ctx = c;
  Value p0 = Value::atom("p0"), p1 = Value::atom("p1"), s0 = Value::atom("s0");
  Value pointed = Value::pair(Value::set({p0, p1}), p1);
  Value plain = Value::set({s0});
  std::vector<Value> left = {Value::pair(pointed, plain)};
  std::vector<Value> right = {Value::pair(plain, pointed)};
  const MacroDef& swap = c.find_define("Swap")->def;
  const MacroDef& unswap = c.find_define("Unswap")->def;
  CHECK(check_cryptomorphism(c, parse("Pointed * Set"), parse("Set * Pointed"), swap,
                             unswap, m, left, right));
  const MacroDef& dup = c.find_define("Dup")->def;
  std::vector<Value> sets = {Value::pair(plain, Value::set({p0}))};
  CHECK_FALSE(check_cryptomorphism(c, parse("Set * Set"), parse("Set * Set"), dup, dup,
                                   m, sets, sets));
}

}  // namespace
}  // namespace btt
