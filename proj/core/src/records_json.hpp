#pragma once

// JSON encoding of the record types, shared by JSONL ingestion and snapshots.

#include <json.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prosopo/name_resolver.hpp"
#include "prosopo/types.hpp"

namespace prosopo::detail {

using nlohmann::json;

/// Schema violation inside one JSON value; callers attach file and line.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Typed field access that remembers which keys were consumed, so unknown
/// fields can be rejected once a record has been read.
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string_view what, bool lenient);

  std::string string(const char* key);
  std::optional<std::string> optional_string(const char* key);
  int integer(const char* key);
  std::optional<int> optional_integer(const char* key);
  std::vector<std::string> strings(const char* key);
  /// Array field; an absent or null field reads as an empty array.
  const json& array(const char* key);
  const json* optional_object(const char* key);
  bool has(const char* key) const;

  void finish() const;

 private:
  const json* field(const char* key, bool required);

  const json& value_;
  std::string what_;
  bool lenient_;
  std::set<std::string> seen_;
};

json to_json(const Article& article);
json to_json(const Person& person);
json to_json(const Alias& alias);
json to_json(const EditorTenure& tenure);
json to_json(const PersonalLink& link);
json to_json(const ResolverConfig& config);

Article article_from_json(const json& value, bool lenient);
Person person_from_json(const json& value, bool lenient);
Alias alias_from_json(const json& value, bool lenient);
EditorTenure tenure_from_json(const json& value, bool lenient);
PersonalLink link_from_json(const json& value, bool lenient);
/// Keys absent from `value` keep their default settings.
ResolverConfig config_from_json(const json& value);

}  // namespace prosopo::detail
