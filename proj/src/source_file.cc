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

#include "btt/source_file.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "btt/macros.h"
#include "btt/typecheck.h"
#include "parser_impl.h"

namespace btt {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

namespace {

constexpr int kMaxImportDepth = 32;

Value parse_value_tokens(TokenStream& ts, const std::map<std::string, Value>& lets) {
  const auto& t = ts.peek();
  if (t.kind == Tok::LBrace) {
    ts.next();
    std::vector<Value> items;
    if (!ts.accept(Tok::RBrace)) {
      do {
        items.push_back(parse_value_tokens(ts, lets));
      } while (ts.accept(Tok::Comma));
      ts.expect(Tok::RBrace);
    }
    return Value::set(std::move(items));
  }
  if (t.kind == Tok::Lt) {
    ts.next();
    Value a = parse_value_tokens(ts, lets);
    ts.expect(Tok::Comma);
    Value b = parse_value_tokens(ts, lets);
    ts.expect(Tok::Gt);
    return Value::pair(std::move(a), std::move(b));
  }
  if (t.kind == Tok::Number) return Value::atom(ts.next().text);
  if (t.kind != Tok::Ident) ts.fail({"value"});
  if (ts.accept_ident("true")) return Value::boolean(true);
  if (ts.accept_ident("false")) return Value::boolean(false);
  if (ts.accept_ident("atom")) {
    const auto& a = ts.peek();
    if (a.kind != Tok::Ident && a.kind != Tok::Number) ts.fail({"atom name"});
    return Value::atom(ts.next().text);
  }
  if (t.text == "fun" && ts.peek(1).kind == Tok::LBrace) {
    ts.next();
    ts.next();
    std::vector<std::pair<Value, Value>> rows;
    SourceSpan span = ts.peek().span;
    if (!ts.accept(Tok::RBrace)) {
      do {
        Value k = parse_value_tokens(ts, lets);
        ts.expect(Tok::Arrow);
        rows.emplace_back(std::move(k), parse_value_tokens(ts, lets));
      } while (ts.accept(Tok::Comma));
      ts.expect(Tok::RBrace);
    }
    try {
      return Value::fun(std::move(rows));
    } catch (const EvalError& e) {
      throw ParseError(e.what(), span);
    }
  }
  std::string name = ts.next().text;
  auto it = lets.find(name);
  if (it != lets.end()) return it->second;
  return Value::atom(std::move(name));
}

std::string canonical_name(const std::string& file) {
  std::error_code ec;
  auto p = std::filesystem::weakly_canonical(file, ec);
  return ec ? file : p.string();
}

class Reader {
 public:
  enum class Mode { Program, Model };

  Reader(TokenStream ts, Mode mode, std::string file, const Context& base,
         std::size_t budget, int depth, const std::set<std::string>& loaded)
      : ts_(std::move(ts)), mode_(mode), file_(std::move(file)), depth_(depth) {
    ctx_ = base;
    model_.budget = budget;
    model_.files = loaded;
    model_.files.insert(canonical_name(file_));
  }

  void run() {
    while (!ts_.at(Tok::End)) statement();
    if (!sections_.empty())
      throw ParseError("section is never closed", sections_.back().span, {"end"});
  }

  Context ctx_;
  FiniteModel model_;
  std::vector<Directive> directives_;

 private:
  struct Saved {
    Context ctx;
    std::map<std::string, Value> assignment;
    SourceSpan span;
  };

  Expr expr() { return uniquify_binders(detail::parse_expr(ts_)); }

  void statement() {
    const auto& t = ts_.peek();
    if (mode_ == Mode::Model && !(ts_.at_ident("let") || ts_.at_ident("import")))
      ts_.fail({"let", "import"});
    if (t.kind == Tok::Directive) return directive();
    if (ts_.at_ident("var") || ts_.at_ident("assume") || ts_.at_ident("def") ||
        ts_.at_ident("defmacro")) {
      SourceSpan span = t.span;
      Entry entry = declaration();
      apply(std::move(entry), span);
      return;
    }
    if (ts_.at_ident("section")) {
      SourceSpan span = ts_.next().span;
      if (ts_.peek().kind == Tok::Ident && !detail::is_keyword(ts_.peek().text)) ts_.next();
      sections_.push_back({ctx_, model_.assignment, span});
      return;
    }
    if (ts_.at_ident("end")) {
      SourceSpan span = ts_.next().span;
      if (sections_.empty()) throw ParseError("'end' without 'section'", span);
      ctx_ = sections_.back().ctx;
      model_.assignment = sections_.back().assignment;
      sections_.pop_back();
      return;
    }
    if (ts_.at_ident("let")) return let();
    if (ts_.at_ident("import")) return import();
    ts_.fail({"var", "assume", "def", "defmacro", "let", "import", "section", "end",
              "directive"});
  }

  Entry declaration() {
    std::string kw = ts_.next().text;
    if (kw == "var") {
      std::string name = detail::parse_name(ts_);
      ts_.expect(Tok::Colon);
      return Decl{name, expr()};
    }
    if (kw == "assume") return Assume{expr()};
    if (kw == "defmacro") {
      std::string name = detail::parse_name(ts_);
      ts_.expect(Tok::Colon);
      Expr t = expr();
      return MacroDecl{name, macro_type_from_expr(ctx_, t)};
    }
    MacroDef def;
    def.span = ts_.peek().span;
    def.name = detail::parse_name(ts_);
    Context scope = ctx_;
    if (ts_.accept(Tok::LParen)) {
      do {
        std::string p = detail::parse_name(ts_);
        ts_.expect(Tok::Colon);
        MacroTypePtr pt = macro_type_from_expr(scope, expr());
        scope = push_param(scope, p, pt);
        def.params.push_back({p, pt});
      } while (ts_.accept(Tok::Comma));
      ts_.expect(Tok::RParen);
    }
    ts_.expect(Tok::Define);
    def.body = expr();
    return Define{def, nullptr, nullptr};
  }

  void apply(Entry entry, const SourceSpan& span) {
    try {
      ctx_ = extend(ctx_, std::move(entry));
    } catch (const TypeError& e) {
      if (e.span().valid()) throw;
      throw TypeError(e.reason(), e.what(), span);
    }
  }

  void let() {
    ts_.next();
    const Token& nt = ts_.peek();
    SourceSpan span = nt.span;
    std::string name = detail::parse_name(ts_);
    ts_.expect(Tok::Eq);
    Value v = parse_value_tokens(ts_, model_.assignment);
    if (const Decl* d = ctx_.find_decl(name)) {
      bool ok = false;
      try {
        ok = check_inhabits(v, ctx_, model_, d->type);
      } catch (const EvalError& e) {
        throw EvalError(EvalFailure::BindingMismatch,
                        fmt::format("cannot check '{}' against '{}': {}", name,
                                    print(d->type), e.what()),
                        span);
      }
      if (!ok)
        throw EvalError(EvalFailure::BindingMismatch,
                        fmt::format("{} is not an element of '{}' (bound to '{}')",
                                    v.str(), print(d->type), name),
                        span);
    } else if (ctx_.declares(name)) {
      throw EvalError(EvalFailure::BindingMismatch,
                      fmt::format("'{}' names a macro, not a variable", name), span);
    }
    model_.assignment[name] = std::move(v);
  }

  void import() {
    SourceSpan span = ts_.next().span;
    const Token& t = ts_.peek();
    if (t.kind != Tok::String) ts_.fail({"file name string"});
    std::string rel = ts_.next().text;
    if (depth_ >= kMaxImportDepth) throw ParseError("imports nested too deeply", span);
    std::filesystem::path p(rel);
    if (p.is_relative()) p = std::filesystem::path(file_).parent_path() / p;
    if (model_.files.count(canonical_name(p.string()))) return;
    std::string text = read_file(p.string());
    Reader sub(TokenStream(detail::tokenize(text, p.string())), Mode::Program,
               p.string(), ctx_, model_.budget, depth_ + 1, model_.files);
    for (const auto& [k, v] : model_.assignment) sub.model_.assignment[k] = v;
    sub.run();
    ctx_ = sub.ctx_;
    model_.assignment = sub.model_.assignment;
    model_.files = sub.model_.files;
  }

  void directive() {
    Token t = ts_.next();
    Directive d;
    d.span = t.span;
    d.ctx = ctx_;
    d.model = model_;
    if (t.text == "#check" || t.text == "#check_ok") {
      d.kind = Directive::Kind::Check;
      d.expr = expr();
      if (ts_.accept(Tok::Colon)) d.type = expr();
    } else if (t.text == "#check_fail") {
      d.kind = Directive::Kind::CheckFail;
      const Token& r = ts_.peek();
      if (r.kind != Tok::Ident || !parse_reason(r.text, d.reason)) ts_.fail({"reason code"});
      ts_.next();
      if (ts_.at_ident("var") || ts_.at_ident("assume") || ts_.at_ident("def") ||
          ts_.at_ident("defmacro")) {
        d.statement = declaration();
      } else {
        d.expr = expr();
      }
    } else if (t.text == "#eval") {
      d.kind = Directive::Kind::Eval;
      d.expr = expr();
      ts_.expect(Tok::EqEq);
      d.expected = parse_value_tokens(ts_, model_.assignment);
    } else if (t.text == "#point" || t.text == "#nonpoint") {
      d.kind = t.text == "#point" ? Directive::Kind::Point : Directive::Kind::NonPoint;
      d.expr = expr();
    } else {
      throw ParseError(fmt::format("unknown directive '{}'", t.text), t.span,
                       {"#check", "#check_fail", "#eval", "#point", "#nonpoint"});
    }
    d.span = detail::join(d.span, ts_.peek().span);
    directives_.push_back(std::move(d));
  }

  TokenStream ts_;
  Mode mode_;
  std::string file_;
  int depth_;
  std::vector<Saved> sections_;
};

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IOError", fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SourceFile parse_source(std::string_view text, const std::string& file,
                        const Context& base, std::size_t budget,
                        const std::set<std::string>& loaded) {
  Reader r(TokenStream(detail::tokenize(text, file)), Reader::Mode::Program, file,
           base, budget, 0, loaded);
  r.run();
  SourceFile out;
  out.path = file;
  out.ctx = r.ctx_;
  out.model = r.model_;
  out.model.ctx = r.ctx_;
  out.directives = std::move(r.directives_);
  return out;
}

SourceFile load_source(const std::string& path, const Context& base,
                       std::size_t budget, const std::set<std::string>& loaded) {
  return parse_source(read_file(path), path, base, budget, loaded);
}

FiniteModel parse_model(std::string_view text, const std::string& file,
                        const Context& ctx, const std::set<std::string>& loaded) {
  Reader r(TokenStream(detail::tokenize(text, file)), Reader::Mode::Model, file, ctx,
           kDefaultBudget, 0, loaded);
  r.run();
  FiniteModel m = r.model_;
  m.ctx = r.ctx_;
  validate_model(m.ctx, m);
  return m;
}

FiniteModel load_model(const std::string& path, const Context& ctx,
                       const std::set<std::string>& loaded) {
  return parse_model(read_file(path), path, ctx, loaded);
}

void validate_model(const Context& ctx, const FiniteModel& model) {
  for (const auto& entry : ctx.entries()) {
    const auto* a = std::get_if<Assume>(&entry);
    if (a == nullptr) continue;
    bool bound = true;
    for (const auto& v : a->formula->fvs) {
      if (ctx.find_decl(v) && !model.assignment.count(v)) bound = false;
    }
    if (!bound) continue;
    if (!eval(ctx, model, a->formula).as_bool())
      throw EvalError(EvalFailure::BindingMismatch,
                      fmt::format("assumption '{}' fails in the model",
                                  print(a->formula)),
                      a->formula->span);
  }
}

Value parse_value(std::string_view text, const std::map<std::string, Value>& lets) {
  TokenStream ts(detail::tokenize(text, "<value>"));
  Value v = parse_value_tokens(ts, lets);
  if (!ts.at(Tok::End)) ts.fail({"end of input"});
  return v;
}

}  // namespace btt
