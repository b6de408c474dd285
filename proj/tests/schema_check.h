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


// A small JSON Schema checker covering the keywords the shipped schemas use.

#ifndef BTT_TESTS_SCHEMA_CHECK_H_
#define BTT_TESTS_SCHEMA_CHECK_H_

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "null") return v.is_null();
  return false;
}

// Appends one message per violation found under `path`.
inline void validate(const json& schema, const json& v, const std::string& path,
                     std::vector<std::string>& errors) {
  if (schema.contains("type") && !type_matches(schema["type"], v)) {
    errors.push_back(path + ": expected " + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || option == v;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"])
    errors.push_back(path + ": below minimum");
  if (v.is_object()) {
    for (const auto& r : schema.value("required", json::array()))
      if (!v.contains(r.get<std::string>()))
        errors.push_back(path + ": missing " + r.get<std::string>());
    json props = schema.value("properties", json::object());
    for (const auto& [k, item] : v.items()) {
      if (props.contains(k))
        validate(props[k], item, path + "." + k, errors);
      else if (schema.value("additionalProperties", true) == false)
        errors.push_back(path + ": unexpected property " + k);
    }
  }
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(path + ": too few items");
    if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>())
      errors.push_back(path + ": too many items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        validate(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
  }
}

inline std::vector<std::string> validate(const json& schema, const json& v) {
  std::vector<std::string> errors;
  validate(schema, v, "$", errors);
  return errors;
}

}  // namespace schema_check

#endif  // BTT_TESTS_SCHEMA_CHECK_H_
