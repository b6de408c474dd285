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

#include "btt/value.h"

#include <algorithm>

#include <fmt/format.h>

#include "btt/errors.h"

namespace btt {

struct Value::Rep {
  Tag tag = Tag::Bool;
  bool b = false;
  std::string atom;
  std::vector<Value> items;
  std::vector<std::pair<Value, Value>> table;
};

namespace {

[[noreturn]] void bad_tag(Tag want, Tag got) {
  throw EvalError(EvalFailure::DomainError,
                  fmt::format("expected a {} value, found a {}", tag_name(want),
                              tag_name(got)));
}

}  // namespace

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::Bool: return "boolean";
    case Tag::Pair: return "pair";
    case Tag::Fun: return "function";
    case Tag::Set: return "set";
    case Tag::Atom: return "atom";
  }
  return "?";
}

Value::Value() {
  static const auto rep = std::make_shared<const Rep>();
  rep_ = rep;
}

Value Value::boolean(bool b) {
  auto r = std::make_shared<Rep>();
  r->b = b;
  return Value(std::move(r));
}

Value Value::atom(std::string name) {
  auto r = std::make_shared<Rep>();
  r->tag = Tag::Atom;
  r->atom = std::move(name);
  return Value(std::move(r));
}

Value Value::pair(Value first, Value second) {
  auto r = std::make_shared<Rep>();
  r->tag = Tag::Pair;
  r->items = {std::move(first), std::move(second)};
  return Value(std::move(r));
}

Value Value::set(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto r = std::make_shared<Rep>();
  r->tag = Tag::Set;
  r->items = std::move(elements);
  return Value(std::move(r));
}

Value Value::fun(std::vector<std::pair<Value, Value>> table) {
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i - 1].first == table[i].first)
      throw EvalError(EvalFailure::DomainError,
                      fmt::format("function table maps {} twice",
                                  table[i].first.str()));
  }
  auto r = std::make_shared<Rep>();
  r->tag = Tag::Fun;
  r->table = std::move(table);
  return Value(std::move(r));
}

Tag Value::tag() const { return rep_->tag; }

bool Value::as_bool() const {
  if (tag() != Tag::Bool) bad_tag(Tag::Bool, tag());
  return rep_->b;
}

const std::string& Value::atom_name() const {
  if (tag() != Tag::Atom) bad_tag(Tag::Atom, tag());
  return rep_->atom;
}

const Value& Value::first() const {
  if (tag() != Tag::Pair) bad_tag(Tag::Pair, tag());
  return rep_->items[0];
}

const Value& Value::second() const {
  if (tag() != Tag::Pair) bad_tag(Tag::Pair, tag());
  return rep_->items[1];
}

const std::vector<Value>& Value::elements() const {
  if (tag() != Tag::Set) bad_tag(Tag::Set, tag());
  return rep_->items;
}

const std::vector<std::pair<Value, Value>>& Value::table() const {
  if (tag() != Tag::Fun) bad_tag(Tag::Fun, tag());
  return rep_->table;
}

bool Value::contains(const Value& v) const {
  const auto& el = elements();
  return std::binary_search(el.begin(), el.end(), v);
}

std::optional<Value> Value::apply(const Value& arg) const {
  const auto& t = table();
  auto it = std::lower_bound(
      t.begin(), t.end(), arg,
      [](const std::pair<Value, Value>& row, const Value& a) { return row.first < a; });
  if (it == t.end() || !(it->first == arg)) return std::nullopt;
  return it->second;
}

std::vector<Value> Value::domain() const {
  std::vector<Value> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

std::vector<Value> Value::image() const {
  std::vector<Value> out;
  for (const auto& [k, v] : table()) out.push_back(v);
  return out;
}

std::string Value::str() const {
  switch (tag()) {
    case Tag::Bool:
      return rep_->b ? "true" : "false";
    case Tag::Atom:
      return rep_->atom;
    case Tag::Pair:
      return fmt::format("<{}, {}>", rep_->items[0].str(), rep_->items[1].str());
    case Tag::Set: {
      std::string out = "{";
      for (std::size_t i = 0; i < rep_->items.size(); ++i) {
        if (i > 0) out += ", ";
        out += rep_->items[i].str();
      }
      return out + "}";
    }
    case Tag::Fun: {
      if (rep_->table.empty()) return "fun {}";
      std::string out = "fun { ";
      for (std::size_t i = 0; i < rep_->table.size(); ++i) {
        if (i > 0) out += ", ";
        out += rep_->table[i].first.str() + " -> " + rep_->table[i].second.str();
      }
      return out + " }";
    }
  }
  return "?";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  const auto& x = *a.rep_;
  const auto& y = *b.rep_;
  if (auto c = x.tag <=> y.tag; c != 0) return c;
  switch (x.tag) {
    case Tag::Bool:
      return x.b <=> y.b;
    case Tag::Atom:
      return x.atom.compare(y.atom) <=> 0;
    case Tag::Pair:
    case Tag::Set:
      return std::lexicographical_compare_three_way(
          x.items.begin(), x.items.end(), y.items.begin(), y.items.end());
    case Tag::Fun:
      return std::lexicographical_compare_three_way(
          x.table.begin(), x.table.end(), y.table.begin(), y.table.end(),
          [](const auto& l, const auto& r) {
            if (auto c = l.first <=> r.first; c != 0) return c;
            return l.second <=> r.second;
          });
  }
  return std::strong_ordering::equal;
}

Value tuple(const std::vector<Value>& items) {
  if (items.empty()) return Value::boolean(true);
  Value out = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) out = Value::pair(items[i], out);
  return out;
}

std::vector<Value> untuple(const Value& v, std::size_t n) {
  std::vector<Value> out;
  if (n == 0) return out;
  Value cur = v;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.push_back(cur.first());
    cur = cur.second();
  }
  out.push_back(cur);
  return out;
}

bool is_bijection(const Value& f, const Value& from, const Value& to) {
  if (!f.is(Tag::Fun) || f.domain() != from.elements()) return false;
  std::vector<Value> img = f.image();
  std::sort(img.begin(), img.end());
  return img == to.elements();
}

Value inverse(const Value& f) {
  std::vector<std::pair<Value, Value>> rows;
  for (const auto& [k, v] : f.table()) rows.emplace_back(v, k);
  return Value::fun(std::move(rows));
}

Value compose(const Value& g, const Value& f) {
  std::vector<std::pair<Value, Value>> rows;
  for (const auto& [k, v] : f.table()) {
    auto r = g.apply(v);
    if (!r)
      throw EvalError(EvalFailure::DomainError,
                      fmt::format("composition undefined at {}", v.str()));
    rows.emplace_back(k, *r);
  }
  return Value::fun(std::move(rows));
}

Value identity_fun(const Value& carrier) {
  std::vector<std::pair<Value, Value>> rows;
  for (const auto& v : carrier.elements()) rows.emplace_back(v, v);
  return Value::fun(std::move(rows));
}

}  // namespace btt
