#pragma once

// Minimal JSON-Schema subset validator for the test suite: handles the
// keywords the published schemas use (type, required, properties, items,
// enum). Collects human-readable errors with their JSON paths.

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

inline bool type_matches(const std::string& type, const nlohmann::json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline void validate_node(const nlohmann::json& schema, const nlohmann::json& value,
                          const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else if (t.is_array()) {
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (got " + std::string(value.type_name()) +
                       ", want " + t.dump() + ")");
      return;
    }
  }

  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& allowed : schema["enum"]) ok = ok || allowed == value;
    if (!ok) errors.push_back(path + ": value " + value.dump() + " not in enum");
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          errors.push_back(path + ": missing required key '" + key.get<std::string>() +
                           "'");
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key))
          validate_node(sub, value.at(key), path + "/" + key, errors);
  }

  if (value.is_array() && schema.contains("items")) {
    const auto& item_schema = schema["items"];
    for (size_t i = 0; i < value.size(); ++i)
      validate_node(item_schema, value[i], path + "/" + std::to_string(i), errors);
  }
}

inline std::vector<std::string> validate(const nlohmann::json& schema,
                                         const nlohmann::json& value) {
  std::vector<std::string> errors;
  validate_node(schema, value, "", errors);
  return errors;
}

}  // namespace schema_check
