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

#include "btt/cli.h"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "btt/errors.h"
#include "btt/macros.h"
#include "btt/parser.h"
#include "btt/sanorm.h"
#include "btt/semantics.h"
#include "btt/source_file.h"
#include "btt/transport.h"
#include "btt/typecheck.h"

namespace btt {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> inputs;
  std::string model;
  std::optional<std::size_t> budget;
  std::string format = "text";
  std::string cls;
  std::string left = "N";
  std::string right = "N'";
  std::string witness;
  std::string tau;
  std::string delta;
  std::string expr;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Context ctx;
  FiniteModel model;
  std::vector<SourceFile> files;
};

std::size_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("BTT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

bool is_model_path(const std::string& p) {
  return p.size() >= 5 && p.compare(p.size() - 5, 5, ".bttm") == 0;
}

Loaded load_inputs(const Options& o) {
  Loaded l;
  std::size_t budget = resolve_budget(o);
  std::vector<std::string> paths = o.inputs;
  if (!o.model.empty()) paths.push_back(o.model);
  std::stable_partition(paths.begin(), paths.end(),
                        [](const std::string& p) { return !is_model_path(p); });
  std::set<std::string> loaded;
  for (const auto& p : paths) {
    if (is_model_path(p)) {
      FiniteModel m = load_model(p, l.ctx, loaded);
      l.ctx = m.ctx;
      loaded = m.files;
      for (auto& [k, v] : m.assignment) l.model.assignment[k] = v;
    } else {
      SourceFile sf = load_source(p, l.ctx, budget, loaded);
      l.ctx = sf.ctx;
      loaded = sf.model.files;
      for (auto& [k, v] : sf.model.assignment) l.model.assignment[k] = v;
      l.files.push_back(std::move(sf));
    }
  }
  l.model.budget = budget;
  l.model.ctx = l.ctx;
  return l;
}

Expr class_of(const Options& o, const Loaded& l) {
  if (!o.cls.empty()) return parse(o.cls, "--class");
  if (const Decl* d = l.ctx.find_decl(o.left)) return d->type;
  throw UsageError(fmt::format("no --class given and '{}' is not declared", o.left));
}

Value value_of(const Loaded& l, const std::string& name) {
  auto it = l.model.assignment.find(name);
  if (it == l.model.assignment.end())
    throw UsageError(fmt::format("the model binds no value to '{}'", name));
  return it->second;
}

const MacroDef& def_of(const Loaded& l, const std::string& name, const char* flag) {
  if (name.empty()) throw UsageError(fmt::format("{} is required", flag));
  const Define* d = l.ctx.find_define(name);
  if (d == nullptr) throw UsageError(fmt::format("'{}' is not a definition", name));
  return d->def;
}

BijectionTuple witness_of(const Options& o, const Loaded& l, const Expr& cls,
                          const Value& n, const Value& n2) {
  if (o.witness.empty()) {
    IsoSet iso = id_set(l.ctx, cls, n, n2, l.model);
    if (iso.empty())
      throw EvalError(EvalFailure::CarrierMismatch,
                      fmt::format("'{}' and '{}' are not isomorphic", o.left, o.right));
    return iso.witnesses.front();
  }
  SAClass sa = sa_normalize(l.ctx, cls);
  return untuple(value_of(l, o.witness), sa.sort_count);
}

std::string diag(const SourceSpan& span, const std::string& code,
                 const std::string& message) {
  if (!span.valid() && span.file.empty())
    return fmt::format("error[{}]: {}", code, message);
  return fmt::format("{}: error[{}]: {}", span.str(), code, message);
}

json table_json(const Value& f) {
  json rows = json::array();
  for (const auto& [k, v] : f.table()) rows.push_back({k.str(), v.str()});
  return rows;
}

// ---- check ----------------------------------------------------------------

struct Outcome {
  bool ok = true;
  std::string code;
  std::string message;
};

std::string_view kind_label(Directive::Kind k) {
  switch (k) {
    case Directive::Kind::Check: return "check";
    case Directive::Kind::CheckFail: return "check_fail";
    case Directive::Kind::Eval: return "eval";
    case Directive::Kind::Point: return "point";
    case Directive::Kind::NonPoint: return "nonpoint";
  }
  return "?";
}

Outcome run_directive(const Directive& d, std::size_t budget) {
  Outcome out;
  try {
    switch (d.kind) {
      case Directive::Kind::Check:
        if (d.type) {
          if (d.type->kind != Kind::UnivSet && d.type->kind != Kind::UnivClass)
            universe_of(d.ctx, d.type);
          check_has_type(d.ctx, d.expr, d.type);
        } else {
          check_type(d.ctx, d.expr);
        }
        break;
      case Directive::Kind::CheckFail: {
        try {
          if (d.statement)
            extend(d.ctx, *d.statement);
          else
            check_type(d.ctx, d.expr);
        } catch (const TypeError& e) {
          if (e.reason() != d.reason)
            return {false, e.code(),
                    fmt::format("expected {} but got {}: {}", reason_name(d.reason),
                                e.code(), e.what())};
          return out;
        }
        return {false, std::string(reason_name(d.reason)),
                fmt::format("expected {} but the input is well-formed",
                            reason_name(d.reason))};
      }
      case Directive::Kind::Eval: {
        check_type(d.ctx, d.expr);
        FiniteModel m = d.model;
        m.budget = budget;
        validate_model(d.ctx, m);
        Value v = eval(d.ctx, m, d.expr);
        if (!(v == d.expected))
          return {false, "ValueMismatch",
                  fmt::format("'{}' evaluates to {}, expected {}", print(d.expr),
                              v.str(), d.expected.str())};
        break;
      }
      case Directive::Kind::Point:
      case Directive::Kind::NonPoint: {
        bool want = d.kind == Directive::Kind::Point;
        if (is_point(d.ctx, d.expr) != want)
          return {false, "PointMismatch",
                  fmt::format("'{}' is {}a point", print(d.expr), want ? "not " : "")};
        break;
      }
    }
  } catch (const Error& e) {
    return {false, e.code(), e.what()};
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load_inputs(o);
  json report = json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& f : l.files) {
    for (const auto& d : f.directives) {
      Outcome r = run_directive(d, l.model.budget);
      ++total;
      if (!r.ok) {
        ++failed;
        err << diag(d.span, r.code, r.message) << "\n";
      }
      json j = {{"file", d.span.file},
                {"line", d.span.start_line},
                {"column", d.span.start_col},
                {"directive", kind_label(d.kind)},
                {"ok", r.ok}};
      if (!r.ok) {
        j["code"] = r.code;
        j["message"] = r.message;
      }
      report.push_back(std::move(j));
    }
  }
  if (o.format == "json") {
    out << json{{"ok", failed == 0},
                {"files", l.files.size()},
                {"directives", total},
                {"failures", failed},
                {"results", report}}
               .dump(2)
        << "\n";
  } else {
    out << fmt::format("{} directives in {} files, {} failed\n", total, l.files.size(),
                       failed);
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

// ---- other commands ---------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.expr.empty()) throw UsageError("--expr is required");
  Loaded l = load_inputs(o);
  Expr e = parse(o.expr, "--expr");
  check_type(l.ctx, e);
  validate_model(l.ctx, l.model);
  Value v = eval(l.ctx, l.model, e);
  if (o.format == "json")
    out << json{{"expr", print(e)}, {"value", v.str()}}.dump(2) << "\n";
  else
    out << v.str() << "\n";
  return kExitOk;
}

std::vector<std::pair<std::string, Expr>> default_targets(const Options& o,
                                                          const Loaded& l,
                                                          Kind universe) {
  std::vector<std::pair<std::string, Expr>> out;
  if (!o.cls.empty() || !o.expr.empty()) {
    std::string text = o.cls.empty() ? o.expr : o.cls;
    out.emplace_back(text, parse(text, "<argument>"));
    return out;
  }
  for (const auto& entry : l.ctx.entries()) {
    const auto* d = std::get_if<Define>(&entry);
    if (d == nullptr || !d->def.params.empty()) continue;
    if (d->type->is_base() && d->type->base->kind == universe)
      out.emplace_back(d->def.name, var(d->def.name));
  }
  return out;
}

std::string def_text(const MacroDef& def) {
  std::string params;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    if (i) params += ", ";
    params += def.params[i].name + " : " + def.params[i].type->str();
  }
  return fmt::format("def {}({}) := {}", def.name, params, print(def.body));
}

int cmd_sa_normalize(const Options& o, std::ostream& out) {
  Loaded l = load_inputs(o);
  json all = json::array();
  for (const auto& [name, cls] : default_targets(o, l, Kind::UnivClass)) {
    check_has_type(l.ctx, cls, univ_class());
    SAClass sa = sa_normalize(l.ctx, cls);
    if (o.format == "json") {
      all.push_back({{"class", name},
                     {"sorts", sa.sort_count},
                     {"signature", print(sa.signature_macro())},
                     {"axioms", print(sa.axioms_macro())},
                     {"normalForm", print(rebuild_class(sa))},
                     {"toSA", def_text(sa.to_sa)},
                     {"fromSA", def_text(sa.from_sa)}});
      continue;
    }
    out << "class " << name << "\n"
        << "  sorts: " << sa.sort_count << "\n"
        << "  signature: " << print(sa.signature_macro()) << "\n"
        << "  axioms: " << print(sa.axioms_macro()) << "\n"
        << "  normal form: " << print(rebuild_class(sa)) << "\n"
        << "  " << def_text(sa.to_sa) << "\n"
        << "  " << def_text(sa.from_sa) << "\n";
  }
  if (o.format == "json") out << all.dump(2) << "\n";
  return kExitOk;
}

int cmd_simplify(const Options& o, std::ostream& out) {
  Loaded l = load_inputs(o);
  struct Target {
    std::string name;
    Context ctx;
    Expr set;
  };
  std::vector<Target> targets;
  if (!o.expr.empty()) {
    targets.push_back({o.expr, l.ctx, parse(o.expr, "--expr")});
  } else {
    // Every set-valued definition whose parameters are plain variables.
    for (const auto& entry : l.ctx.entries()) {
      const auto* d = std::get_if<Define>(&entry);
      if (d == nullptr) continue;
      MacroTypePtr result = d->type;
      Context inner = l.ctx;
      for (const auto& p : d->def.params) {
        if (!p.type->is_base()) break;
        inner = push_param(inner, p.name, p.type);
        result = result->result;
      }
      if (result == nullptr || !result->is_base() || result->base->kind != Kind::UnivSet)
        continue;
      targets.push_back({d->def.name, inner, d->def.body});
    }
  }
  json all = json::array();
  for (const auto& t : targets) {
    check_has_type(t.ctx, t.set, univ_set());
    Expr e = expand(t.ctx, t.set);
    Expr r = simplify_signature(t.ctx, e);
    if (o.format == "json")
      all.push_back({{"name", t.name}, {"input", print(e)}, {"simplified", print(r)}});
    else
      out << t.name << ": " << print(e) << "\n  => " << print(r) << "\n";
  }
  if (o.format == "json") out << all.dump(2) << "\n";
  return kExitOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  Loaded l = load_inputs(o);
  Expr cls = class_of(o, l);
  IsoSet iso = id_set(l.ctx, cls, value_of(l, o.left), value_of(l, o.right), l.model);
  if (o.format == "json") {
    json ws = json::array();
    for (const auto& w : iso.witnesses) {
      json tuple = json::array();
      for (const auto& f : w) tuple.push_back(table_json(f));
      ws.push_back(std::move(tuple));
    }
    out << json{{"isomorphic", !iso.empty()},
                {"witnessCount", iso.size()},
                {"witnesses", ws}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "isomorphic: " << (iso.empty() ? "false" : "true") << "\n"
      << "witnessCount: " << iso.size() << "\n";
  for (const auto& w : iso.witnesses) {
    std::string line;
    for (std::size_t i = 0; i < w.size(); ++i) line += (i ? "; " : "") + w[i].str();
    out << "  " << line << "\n";
  }
  return kExitOk;
}

int cmd_transport(const Options& o, std::ostream& out) {
  Loaded l = load_inputs(o);
  Expr cls = class_of(o, l);
  if (o.witness.empty()) throw UsageError("--witness is required");
  SAClass sa = sa_normalize(l.ctx, cls);
  BijectionTuple f = untuple(value_of(l, o.witness), sa.sort_count);
  Value moved = transport_structure(l.ctx, cls, value_of(l, o.left), f, l.model);
  if (o.format == "json")
    out << json{{"value", moved.str()}}.dump(2) << "\n";
  else
    out << moved.str() << "\n";
  return kExitOk;
}

int cmd_jprime(const Options& o, std::ostream& out, bool with_delta) {
  Loaded l = load_inputs(o);
  Expr cls = class_of(o, l);
  Value n = value_of(l, o.left), n2 = value_of(l, o.right);
  BijectionTuple f = witness_of(o, l, cls, n, n2);
  const MacroDef& tau = def_of(l, o.tau, "--tau");
  Value result = with_delta ? j_operator(l.ctx, cls, n, n2, f, tau,
                                         def_of(l, o.delta, "--delta"), l.model)
                            : j_prime(l.ctx, cls, n, n2, f, tau, l.model);
  if (o.format == "json")
    out << json{{"value", result.str()}}.dump(2) << "\n";
  else
    out << result.str() << "\n";
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("inputs", o.inputs, "source (.btt) and model (.bttm) files");
  sub->add_option("--model", o.model, "model file (.bttm)");
  sub->add_option("--budget", o.budget, "enumeration budget (default 10000, or $BTT_BUDGET)");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_structures(CLI::App* sub, Options& o) {
  sub->add_option("--class", o.cls, "class expression (default: type of --left)");
  sub->add_option("--left", o.left, "model variable holding N (default N)");
  sub->add_option("--right", o.right, "model variable holding N' (default N')");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"btt: checker, normalizer and finite-model evaluator for Bourbaki type theory",
               "btt"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run the directives in source files");
  add_common(check, o);
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression in a finite model");
  add_common(eval_cmd, o);
  eval_cmd->add_option("--expr", o.expr, "expression to evaluate");
  auto* sa = app.add_subcommand("sa-normalize", "signature-axiom normal form of classes");
  add_common(sa, o);
  sa->add_option("--class", o.cls, "class expression (default: every class definition)");
  auto* simp = app.add_subcommand("simplify", "apply the signature simplification rules");
  add_common(simp, o);
  simp->add_option("--expr", o.expr, "set expression (default: every set definition)");
  auto* iso = app.add_subcommand("iso", "enumerate isomorphisms between two structures");
  add_common(iso, o);
  add_structures(iso, o);
  auto* tr = app.add_subcommand("transport", "transport a structure along bijections");
  add_common(tr, o);
  add_structures(tr, o);
  tr->add_option("--witness", o.witness, "model variable holding the bijection tuple");
  auto* jp = app.add_subcommand("jprime", "the J' function along an isomorphism");
  add_common(jp, o);
  add_structures(jp, o);
  jp->add_option("--witness", o.witness, "bijection tuple (default: first isomorphism)");
  jp->add_option("--tau", o.tau, "definition tau(n, n', g)");
  auto* j = app.add_subcommand("j", "the J eliminator along an isomorphism");
  add_common(j, o);
  add_structures(j, o);
  j->add_option("--witness", o.witness, "bijection tuple (default: first isomorphism)");
  j->add_option("--tau", o.tau, "definition tau(n, n', g)");
  j->add_option("--delta", o.delta, "definition delta(n)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "btt: " << e.what() << "\n" << "run 'btt --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (sa->parsed()) return cmd_sa_normalize(o, out);
    if (simp->parsed()) return cmd_simplify(o, out);
    if (iso->parsed()) return cmd_iso(o, out);
    if (tr->parsed()) return cmd_transport(o, out);
    if (jp->parsed()) return cmd_jprime(o, out, false);
    if (j->parsed()) return cmd_jprime(o, out, true);
  } catch (const UsageError& e) {
    err << "btt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TypeError& e) {
    err << diag(e.span(), e.code(), e.what()) << "\n";
    return kExitFailure;
  } catch (const UnsupportedClass& e) {
    err << diag(e.span(), e.code(), e.what()) << "\n";
    return kExitFailure;
  } catch (const EvalError& e) {
    err << diag(e.span(), e.code(), e.what()) << "\n";
    return e.failure() == EvalFailure::BindingMismatch ? kExitFailure : kExitOperational;
  } catch (const Error& e) {
    err << diag(e.span(), e.code(), e.what()) << "\n";
    return kExitOperational;
  }
  return kExitUsage;
}

}  // namespace btt
