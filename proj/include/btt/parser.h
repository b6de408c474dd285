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

#ifndef BTT_PARSER_H_
#define BTT_PARSER_H_

#include <string>
#include <string_view>

#include "btt/syntax.h"

namespace btt {

// Parses one expression in the concrete syntax. Binders are renamed so they
// are locally unique. Throws ParseError.
Expr parse(std::string_view text, const std::string& file = "<input>");

}  // namespace btt

#endif  // BTT_PARSER_H_
