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

#ifndef BTT_SRC_PARSER_IMPL_H_
#define BTT_SRC_PARSER_IMPL_H_

#include <string>
#include <string_view>
#include <vector>

#include "btt/syntax.h"
#include "lexer.h"

namespace btt::detail {

// Recursive-descent parser over a token vector. Shared by the expression,
// source-file and model-file front ends.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const {
    return peek().kind == Tok::Ident && peek().text == text;
  }
  Token next();
  Token expect(Tok kind);
  Token expect_ident(std::string_view text);
  bool accept(Tok kind);
  bool accept_ident(std::string_view text);
  [[noreturn]] void fail(std::vector<std::string> expected) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_keyword(std::string_view word);

// Stops before any token that cannot continue an expression.
Expr parse_expr(TokenStream& ts);
// Name of a binder or declaration; rejects keywords.
std::string parse_name(TokenStream& ts);

SourceSpan join(const SourceSpan& a, const SourceSpan& b);

}  // namespace btt::detail

#endif  // BTT_SRC_PARSER_IMPL_H_
