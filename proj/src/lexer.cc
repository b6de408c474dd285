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

#include "lexer.h"

#include <cctype>

#include <fmt/format.h>

#include "btt/errors.h"

namespace btt::detail {

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::Directive: return "directive";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Define: return "':='";
    case Tok::Star: return "'*'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::IsoOpen: return "'=['";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
    case Tok::Bang: return "'!'";
    case Tok::Or: return "'\\/'";
    case Tok::And: return "'/\\'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.span.file = file;
    tok.span.start_line = line;
    tok.span.start_col = col;
    std::size_t begin = i;
    auto emit = [&](Tok kind, std::size_t len) {
      tok.kind = kind;
      advance(len);
      tok.text = std::string(text.substr(begin, i - begin));
      tok.span.end_line = line;
      tok.span.end_col = col;
      out.push_back(tok);
    };

    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      emit(Tok::Number, j - i);
    } else if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::Directive, j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') {
        throw ParseError("unterminated string literal", tok.span);
      }
      emit(Tok::String, j + 1 - i);
      out.back().text = out.back().text.substr(1, out.back().text.size() - 2);
    } else if (starts("<=>")) {
      emit(Tok::Iff, 3);
    } else if (starts(":=")) {
      emit(Tok::Define, 2);
    } else if (starts("->")) {
      emit(Tok::Arrow, 2);
    } else if (starts("==")) {
      emit(Tok::EqEq, 2);
    } else if (starts("=>")) {
      emit(Tok::Implies, 2);
    } else if (starts("=[")) {
      emit(Tok::IsoOpen, 2);
    } else if (starts("\\/")) {
      emit(Tok::Or, 2);
    } else if (starts("/\\")) {
      emit(Tok::And, 2);
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case ',': kind = Tok::Comma; break;
        case '.': kind = Tok::Dot; break;
        case ':': kind = Tok::Colon; break;
        case '*': kind = Tok::Star; break;
        case '=': kind = Tok::Eq; break;
        case '!': kind = Tok::Bang; break;
        default:
          throw ParseError(fmt::format("unexpected character '{}'", c), tok.span);
      }
      emit(kind, 1);
    }
  }
  Token end;
  end.kind = Tok::End;
  end.span.file = file;
  end.span.start_line = end.span.end_line = line;
  end.span.start_col = end.span.end_col = col;
  out.push_back(end);
  return out;
}

}  // namespace btt::detail
