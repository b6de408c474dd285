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

#ifndef BTT_SOURCE_SPAN_H_
#define BTT_SOURCE_SPAN_H_

#include <string>

namespace btt {

// 1-based, inclusive start and exclusive end column. A default span (line 0)
// marks synthesized nodes.
struct SourceSpan {
  std::string file;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool valid() const { return start_line > 0; }
  std::string str() const;
};

}  // namespace btt

#endif  // BTT_SOURCE_SPAN_H_
