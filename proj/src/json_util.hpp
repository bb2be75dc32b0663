#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cascade/error.hpp"

// Schema helpers shared by the JSON readers. Every failure is reported as
// Error(kSchemaError) naming the document and field.
namespace cascade::detail {

using nlohmann::json;

inline json parse_json(std::string_view document, const std::string& what) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError,
                what + " is not valid JSON: " + e.what());
  }
}

/// Requires an object holding every key of `required`; rejects keys outside
/// `required` and `optional`.
inline void expect_keys(const json& value, const std::string& what,
                        std::initializer_list<std::string_view> required,
                        std::initializer_list<std::string_view> optional) {
  if (!value.is_object())
    throw Error(ErrorCode::kSchemaError, what + " must be a JSON object");
  for (std::string_view key : required) {
    if (!value.contains(key))
      throw Error(ErrorCode::kSchemaError,
                  what + " is missing key '" + std::string(key) + "'");
  }
  for (const auto& [key, unused] : value.items()) {
    bool known = false;
    for (std::string_view k : required) known = known || k == key;
    for (std::string_view k : optional) known = known || k == key;
    if (!known)
      throw Error(ErrorCode::kSchemaError,
                  what + " has unknown key '" + key + "'");
  }
}

inline const json& array_at(const json& value, const std::string& key) {
  const json& field = value.at(key);
  if (!field.is_array())
    throw Error(ErrorCode::kSchemaError, "'" + key + "' must be an array");
  return field;
}

inline std::string string_at(const json& value, const std::string& key) {
  const json& field = value.at(key);
  if (!field.is_string())
    throw Error(ErrorCode::kSchemaError, "'" + key + "' must be a string");
  return field.get<std::string>();
}

inline double number_at(const json& value, const std::string& key) {
  const json& field = value.at(key);
  if (!field.is_number())
    throw Error(ErrorCode::kSchemaError, "'" + key + "' must be a number");
  return field.get<double>();
}

inline std::vector<std::string> strings_at(const json& value,
                                           const std::string& key) {
  std::vector<std::string> out;
  for (const json& item : array_at(value, key)) {
    if (!item.is_string())
      throw Error(ErrorCode::kSchemaError,
                  "'" + key + "' must hold only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

/// Sorted keys (the default object map is ordered), two-space indent,
/// trailing newline.
inline std::string dump_canonical(const json& value) {
  return value.dump(2) + "\n";
}

}  // namespace cascade::detail
