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

#include "btt/parser.h"

#include <array>

#include <fmt/format.h>

#include "btt/errors.h"
#include "parser_impl.h"

namespace btt {
namespace detail {

namespace {

constexpr std::array<std::string_view, 20> kKeywords{
    "Sigma", "Pi",    "Lambda", "S",   "Forall",   "Exists",  "The",
    "Set",   "Class", "Bool",   "True", "False",   "Id",      "var",
    "assume", "def",  "defmacro", "section", "let", "import"};

Kind binder_kind(std::string_view word, bool& ok) {
  ok = true;
  if (word == "Sigma") return Kind::Sigma;
  if (word == "Pi") return Kind::Pi;
  if (word == "Lambda") return Kind::Lambda;
  if (word == "S") return Kind::Subset;
  if (word == "Forall") return Kind::Forall;
  if (word == "Exists") return Kind::Exists;
  if (word == "The") return Kind::The;
  ok = false;
  return Kind::Var;
}

Expr parse_iff(TokenStream& ts);

Expr parse_binder(TokenStream& ts, Kind kind) {
  Token kw = ts.next();
  ts.expect(Tok::LParen);
  std::string name = parse_name(ts);
  ts.expect(Tok::Colon);
  Expr dom = parse_expr(ts);
  ts.expect(Tok::RParen);
  if (kind == Kind::The &&
      (dom->kind == Kind::UnivSet || dom->kind == Kind::UnivClass)) {
    throw ParseError("The requires a set domain, not a universe", dom->span,
                     {"set expression"});
  }
  Expr body = parse_expr(ts);
  SourceSpan span = join(kw.span, body->span);
  switch (kind) {
    case Kind::Sigma: return sigma(name, dom, body, span);
    case Kind::Pi: return pi(name, dom, body, span);
    case Kind::Lambda: return lambda(name, dom, body, span);
    case Kind::Subset: return subset(name, dom, body, span);
    case Kind::Forall: return forall(name, dom, body, span);
    case Kind::Exists: return exists(name, dom, body, span);
    default: return the(name, dom, body, span);
  }
}

Expr parse_primary(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Tok::Ident) {
    bool binder = false;
    Kind k = binder_kind(t.text, binder);
    if (binder && ts.peek(1).kind == Tok::LParen) return parse_binder(ts, k);
    Token tok = ts.next();
    if (tok.text == "Set") return univ_set(tok.span);
    if (tok.text == "Class") return univ_class(tok.span);
    if (tok.text == "Bool") return bool_sort(tok.span);
    if (tok.text == "True") return bool_lit(true, tok.span);
    if (tok.text == "False") return bool_lit(false, tok.span);
    if (tok.text == "Id") {
      ts.expect(Tok::LBracket);
      Expr cls = parse_expr(ts);
      ts.expect(Tok::RBracket);
      ts.expect(Tok::LParen);
      Expr l = parse_expr(ts);
      ts.expect(Tok::Comma);
      Expr r = parse_expr(ts);
      Token close = ts.expect(Tok::RParen);
      return id_set(cls, l, r, join(tok.span, close.span));
    }
    if (is_keyword(tok.text) || tok.text == std::string(kVacuous)) {
      throw ParseError(fmt::format("'{}' cannot be used as a variable", tok.text),
                       tok.span, {"expression"});
    }
    return var(tok.text, tok.span);
  }
  if (t.kind == Tok::LParen) {
    Token open = ts.next();
    Expr e = parse_expr(ts);
    ts.expect(Tok::RParen);
    return e;
  }
  if (t.kind == Tok::Lt) {
    Token open = ts.next();
    Expr l = parse_expr(ts);
    ts.expect(Tok::Comma);
    Expr r = parse_expr(ts);
    Token close = ts.expect(Tok::Gt);
    return pair(l, r, join(open.span, close.span));
  }
  ts.fail({"expression"});
}

Expr parse_postfix(TokenStream& ts) {
  Expr e = parse_primary(ts);
  for (;;) {
    if (ts.at(Tok::LParen)) {
      ts.next();
      Expr arg = parse_expr(ts);
      Token close = ts.expect(Tok::RParen);
      e = app(e, arg, join(e->span, close.span));
    } else if (ts.at(Tok::Dot)) {
      ts.next();
      Token num = ts.expect(Tok::Number);
      if (num.text != "1" && num.text != "2") {
        throw ParseError(
            fmt::format("projection index must be 1 or 2, got {}", num.text),
            num.span, {"1", "2"});
      }
      e = proj(num.text == "1" ? 1 : 2, e, join(e->span, num.span));
    } else if (ts.at(Tok::LBracket)) {
      ts.next();
      std::vector<Expr> args;
      args.push_back(parse_expr(ts));
      while (ts.accept(Tok::Comma)) args.push_back(parse_expr(ts));
      Token close = ts.expect(Tok::RBracket);
      e = macro_app(e, std::move(args), join(e->span, close.span));
    } else {
      return e;
    }
  }
}

Expr parse_prod(TokenStream& ts) {
  Expr l = parse_postfix(ts);
  if (!ts.at(Tok::Star)) return l;
  ts.next();
  Expr r = parse_prod(ts);
  return product(l, r, join(l->span, r->span));
}

Expr parse_arrow(TokenStream& ts) {
  Expr l = parse_prod(ts);
  if (!ts.at(Tok::Arrow)) return l;
  ts.next();
  Expr r = parse_arrow(ts);
  return arrow(l, r, join(l->span, r->span));
}

Expr parse_eq(TokenStream& ts) {
  Expr l = parse_arrow(ts);
  if (ts.accept(Tok::Eq)) {
    Expr r = parse_arrow(ts);
    return set_eq(l, r, join(l->span, r->span));
  }
  if (ts.accept(Tok::IsoOpen)) {
    Expr cls = parse_expr(ts);
    ts.expect(Tok::RBracket);
    ts.expect(Tok::Eq);
    Expr r = parse_arrow(ts);
    return iso_eq(cls, l, r, join(l->span, r->span));
  }
  return l;
}

Expr parse_not(TokenStream& ts) {
  if (ts.at(Tok::Bang)) {
    Token bang = ts.next();
    Expr f = parse_not(ts);
    return not_(f, join(bang.span, f->span));
  }
  return parse_eq(ts);
}

Expr parse_and(TokenStream& ts) {
  Expr l = parse_not(ts);
  while (ts.accept(Tok::And)) {
    Expr r = parse_not(ts);
    l = and_(l, r, join(l->span, r->span));
  }
  return l;
}

Expr parse_or(TokenStream& ts) {
  Expr l = parse_and(ts);
  while (ts.accept(Tok::Or)) {
    Expr r = parse_and(ts);
    l = or_(l, r, join(l->span, r->span));
  }
  return l;
}

Expr parse_implies(TokenStream& ts) {
  Expr l = parse_or(ts);
  if (!ts.accept(Tok::Implies)) return l;
  Expr r = parse_implies(ts);
  return implies(l, r, join(l->span, r->span));
}

Expr parse_iff(TokenStream& ts) {
  Expr l = parse_implies(ts);
  if (!ts.accept(Tok::Iff)) return l;
  Expr r = parse_iff(ts);
  return iff(l, r, join(l->span, r->span));
}

}  // namespace

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
  return toks_[i];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

Token TokenStream::expect(Tok kind) {
  if (!at(kind)) fail({std::string(tok_name(kind))});
  return next();
}

Token TokenStream::expect_ident(std::string_view text) {
  if (!at_ident(text)) fail({fmt::format("'{}'", text)});
  return next();
}

bool TokenStream::accept(Tok kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

bool TokenStream::accept_ident(std::string_view text) {
  if (!at_ident(text)) return false;
  next();
  return true;
}

void TokenStream::fail(std::vector<std::string> expected) const {
  const Token& t = peek();
  std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  std::string want;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) want += ", ";
    want += expected[i];
  }
  throw ParseError(fmt::format("expected {} but found {}", want, got), t.span,
                   std::move(expected));
}

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return word == "end";
}

std::string parse_name(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind != Tok::Ident || (is_keyword(t.text) && t.text != "_"))
    ts.fail({"identifier"});
  return ts.next().text;
}

Expr parse_expr(TokenStream& ts) { return parse_iff(ts); }

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  SourceSpan s = a;
  s.end_line = b.end_line;
  s.end_col = b.end_col;
  return s;
}

}  // namespace detail

Expr parse(std::string_view text, const std::string& file) {
  detail::TokenStream ts(detail::tokenize(text, file));
  Expr e = detail::parse_expr(ts);
  if (!ts.at(detail::Tok::End)) ts.fail({"end of input"});
  return uniquify_binders(e);
}

}  // namespace btt
