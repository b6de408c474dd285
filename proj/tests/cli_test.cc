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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "btt/cli.h"
#include "btt/source_file.h"
#include "schema_check.h"

namespace btt {
namespace {

const std::string kCorpus = BTT_CORPUS_DIR;
const std::string kSchemas = BTT_SCHEMA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return kCorpus + "/" + name; }

nlohmann::json schema(const std::string& name) {
  return nlohmann::json::parse(read_file(kSchemas + "/" + name));
}

void check_schema(const std::string& name, const std::string& text) {
  auto errors = schema_check::validate(schema(name), nlohmann::json::parse(text));
  for (const auto& e : errors) FAIL_CHECK(name << ": " << e);
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "btt_cli_test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

TEST_CASE("help and usage errors") {
  Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("iso") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"iso", "--format", "yaml", "--model", corpus("graphs.bttm")}).code ==
        kExitUsage);
  CHECK(run({"transport", "--model", corpus("graphs.bttm")}).code == kExitUsage);
  CHECK(run({"eval", corpus("eval.btt")}).code == kExitUsage);
}

TEST_CASE("check reports directive outcomes through the exit code") {
  CHECK(run({"check", corpus("sequents.btt")}).code == kExitOk);
  CHECK(run({"check", temp_file("empty.btt", "")}).code == kExitOk);
  Run bad = run({"check", temp_file("across.btt",
                                    "var a : Set\nvar b : Set\nvar x : a\nvar y : b\n"
                                    "#check_ok x = y\n")});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.err.find("across.btt:5:1: error[EqualityAcrossSorts]") != std::string::npos);
  CHECK(bad.out == "1 directives in 1 files, 1 failed\n");
  Run wrong = run({"check", temp_file("wrong.btt",
                                      "var a : Set\nvar x : a\n#check_fail PiOverClass x = x\n")});
  CHECK(wrong.code == kExitFailure);
  Run eval_bad = run({"check", temp_file("eval.btt",
                                         "var a : Set\nlet a = {p}\n#eval a == {q}\n")});
  CHECK(eval_bad.code == kExitFailure);
  CHECK(eval_bad.err.find("ValueMismatch") != std::string::npos);
}

TEST_CASE("operational errors exit with 2") {
  CHECK(run({"check", corpus("missing.btt")}).code == kExitOperational);
  Run parse = run({"check", temp_file("parse.btt", "var a : \n")});
  CHECK(parse.code == kExitOperational);
  CHECK(parse.err.find("error[ParseError]") != std::string::npos);
  Run budget = run({"iso", "--budget", "10", "--model", corpus("big.bttm")});
  CHECK(budget.code == kExitOperational);
  CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
  CHECK(budget.err.find("[4]") != std::string::npos);
}

TEST_CASE("the budget can come from the environment") {
  setenv("BTT_BUDGET", "10", 1);
  Run r = run({"iso", "--model", corpus("big.bttm")});
  unsetenv("BTT_BUDGET");
  CHECK(r.code == kExitOperational);
  CHECK(run({"iso", "--model", corpus("big.bttm")}).code == kExitOk);
}

TEST_CASE("bindings that do not inhabit their type exit with 1") {
  Run r = run({"iso", "--model", corpus("z2_bad.bttm")});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("BindingMismatch") != std::string::npos);
}

TEST_CASE("iso reports") {
  Run one = run({"iso", "--model", corpus("graphs.bttm"), "--format", "json"});
  REQUIRE(one.code == 0);
  check_schema("iso.schema.json", one.out);
  auto j = nlohmann::json::parse(one.out);
  CHECK(j["isomorphic"] == true);
  CHECK(j["witnessCount"] == 1);
  auto empty = nlohmann::json::parse(
      run({"iso", "--model", corpus("graphs_empty.bttm"), "--format", "json"}).out);
  CHECK(empty["witnessCount"] == 2);
  CHECK(empty["witnesses"][0][0] == nlohmann::json::parse(R"([["a0","a0"],["a1","a1"]])"));
  auto magmas = nlohmann::json::parse(
      run({"iso", "--model", corpus("magmas.bttm"), "--format", "json"}).out);
  CHECK(magmas["isomorphic"] == false);
  Run text = run({"iso", "--model", corpus("graphs.bttm")});
  CHECK(text.out == "isomorphic: true\nwitnessCount: 1\n  fun { a0 -> a1, a1 -> a0 }\n");
}

TEST_CASE("every JSON output matches its schema") {
  check_schema("check.schema.json",
               run({"check", corpus("sequents.btt"), "--format", "json"}).out);
  check_schema("check.schema.json",
               run({"check", temp_file("fail.btt", "#check_ok w\n"), "--format", "json"}).out);
  check_schema("sa-normalize.schema.json",
               run({"sa-normalize", corpus("classes.btt"), "--format", "json"}).out);
  check_schema("simplify.schema.json",
               run({"simplify", corpus("signatures.btt"), "--format", "json"}).out);
  check_schema("value.schema.json",
               run({"eval", "--model", corpus("graphs.bttm"), "--expr", "Reverse[N]",
                    "--format", "json"}).out);
  check_schema("value.schema.json",
               run({"transport", "--model", corpus("graphs.bttm"), "--witness", "f",
                    "--format", "json"}).out);
  check_schema("value.schema.json", run({"jprime", "--model", corpus("graphs.bttm"),
                                         "--tau", "Hom", "--format", "json"}).out);
  check_schema("value.schema.json",
               run({"j", "--model", corpus("graphs.bttm"), "--tau", "Hom", "--delta", "Refl",
                    "--format", "json"}).out);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> invocations = {
      {"iso", "--model", corpus("big.bttm"), "--format", "json"},
      {"iso", "--model", corpus("pointed.bttm")},
      {"sa-normalize", corpus("classes.btt")},
      {"check", corpus("sequents.btt"), corpus("eval.btt"), "--format", "json"},
      {"jprime", "--model", corpus("graphs.bttm"), "--tau", "Hom"},
  };
  for (const auto& args : invocations) {
    Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("sa-normalize output matches the recorded normal forms") {
  Run r = run({"sa-normalize", corpus("classes.btt")});
  REQUIRE(r.code == 0);
  CHECK(r.out == read_file(std::string(BTT_GOLDEN_DIR) + "/classes.sa.txt"));
}

TEST_CASE("structure commands") {
  Run t = run({"transport", "--model", corpus("graphs.bttm"), "--witness", "f"});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "<{a0, a1}, fun { <a0, a0> -> false, <a0, a1> -> false, <a1, a0> -> true, "
        "<a1, a1> -> false }>\n");
  Run j = run({"j", "--model", corpus("graphs.bttm"), "--tau", "Hom", "--delta", "Refl"});
  CHECK(j.out == "fun { a0 -> a1, a1 -> a0 }\n");
  Run jz = run({"j", "--model", corpus("z2.bttm"), "--tau", "Elt", "--delta", "Unit"});
  CHECK(jz.out == "v\n");
  CHECK(run({"jprime", "--model", corpus("graphs.bttm"), "--tau", "Nope"}).code == kExitUsage);
}

}  // namespace
}  // namespace btt
