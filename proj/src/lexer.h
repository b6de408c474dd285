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

#ifndef BTT_SRC_LEXER_H_
#define BTT_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "btt/source_span.h"

namespace btt::detail {

enum class Tok {
  Ident,
  Number,
  String,
  Directive,  // `#name`
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Lt,
  Gt,
  Comma,
  Dot,
  Colon,
  Define,  // :=
  Star,
  Arrow,  // ->
  Eq,     // =
  EqEq,   // ==
  IsoOpen,  // =[
  Implies,  // =>
  Iff,      // <=>
  Bang,
  Or,   // \/
  And,  // /\   (backslash-slash pairs)
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string_view tok_name(Tok t);

// Splits `text` into tokens. `--` starts a line comment. Throws ParseError on
// characters outside the grammar.
std::vector<Token> tokenize(std::string_view text, const std::string& file);

}  // namespace btt::detail

#endif  // BTT_SRC_LEXER_H_
