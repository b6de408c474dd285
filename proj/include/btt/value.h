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

#ifndef BTT_VALUE_H_
#define BTT_VALUE_H_

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace btt {

enum class Tag { Bool, Pair, Fun, Set, Atom };

std::string_view tag_name(Tag t);

// Immutable semantic value. Equality and ordering are structural; sets are
// kept sorted and duplicate-free, function tables sorted by argument.
class Value {
 public:
  Value();  // false

  static Value boolean(bool b);
  static Value atom(std::string name);
  static Value pair(Value first, Value second);
  static Value set(std::vector<Value> elements);
  // Throws EvalError(DomainError) if an argument is listed with two results.
  static Value fun(std::vector<std::pair<Value, Value>> table);

  Tag tag() const;
  bool is(Tag t) const { return tag() == t; }

  bool as_bool() const;
  const std::string& atom_name() const;
  const Value& first() const;
  const Value& second() const;
  const std::vector<Value>& elements() const;
  const std::vector<std::pair<Value, Value>>& table() const;

  bool contains(const Value& v) const;
  std::optional<Value> apply(const Value& arg) const;
  std::vector<Value> domain() const;
  std::vector<Value> image() const;

  // .bttm value literal.
  std::string str() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Rep;
  explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Right-nested pairs for n >= 2, the value itself for n = 1.
Value tuple(const std::vector<Value>& items);
std::vector<Value> untuple(const Value& v, std::size_t n);

bool is_bijection(const Value& f, const Value& from, const Value& to);
Value inverse(const Value& f);
Value compose(const Value& g, const Value& f);  // g after f
Value identity_fun(const Value& carrier);

}  // namespace btt

#endif  // BTT_VALUE_H_
