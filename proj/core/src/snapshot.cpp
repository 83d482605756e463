#include <fstream>
#include <sstream>

#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"
#include "records_json.hpp"

namespace prosopo {
namespace {

template <typename T, typename Parse>
std::vector<T> records_from(const detail::json& doc, const char* key, Parse parse) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw SnapshotError(std::string("snapshot is missing the '") + key + "' section");
  }
  std::vector<T> out;
  out.reserve(it->size());
  for (const auto& item : *it) out.push_back(parse(item, false));
  return out;
}

template <typename T>
detail::json records_to(const std::vector<T>& records) {
  detail::json out = detail::json::array();
  for (const auto& record : records) out.push_back(detail::to_json(record));
  return out;
}

}  // namespace

std::string snapshot_text(const Corpus& corpus) {
  const CorpusData& d = corpus.records();
  detail::json doc = detail::json::object();
  doc["config"] = detail::to_json(corpus.config());
  doc["articles"] = records_to(d.articles);
  doc["persons"] = records_to(d.persons);
  doc["aliases"] = records_to(d.aliases);
  doc["tenures"] = records_to(d.tenures);
  doc["links"] = records_to(d.links);
  std::string text;
  text += kSnapshotMagic;
  text += ' ';
  text += kSnapshotVersion;
  text += '\n';
  text += doc.dump(1);
  text += '\n';
  return text;
}

Corpus parse_snapshot(std::string_view text) {
  const auto newline = text.find('\n');
  if (newline == std::string_view::npos) throw SnapshotError("truncated snapshot: no header line");
  const std::string_view header = text.substr(0, newline);
  const auto space = header.find(' ');
  if (space == std::string_view::npos || header.substr(0, space) != kSnapshotMagic) {
    throw SnapshotError("not a snapshot file: missing PROSO header");
  }
  const std::string_view version = header.substr(space + 1);
  if (version != kSnapshotVersion) {
    throw SnapshotVersionError(std::string(version), std::string(kSnapshotVersion));
  }

  detail::json doc;
  try {
    doc = detail::json::parse(text.substr(newline + 1));
  } catch (const detail::json::parse_error& e) {
    throw SnapshotError(std::string("truncated or corrupt snapshot: ") + e.what());
  }
  if (!doc.is_object()) throw SnapshotError("corrupt snapshot: body is not an object");

  try {
    CorpusData data;
    data.articles = records_from<Article>(doc, "articles", detail::article_from_json);
    data.persons = records_from<Person>(doc, "persons", detail::person_from_json);
    data.aliases = records_from<Alias>(doc, "aliases", detail::alias_from_json);
    data.tenures = records_from<EditorTenure>(doc, "tenures", detail::tenure_from_json);
    data.links = records_from<PersonalLink>(doc, "links", detail::link_from_json);
    auto config = doc.find("config");
    if (config == doc.end()) throw SnapshotError("snapshot is missing the 'config' section");
    return Corpus::build(std::move(data), detail::config_from_json(*config));
  } catch (const detail::SchemaError& e) {
    throw SnapshotError(std::string("corrupt snapshot: ") + e.what());
  }
}

void save_snapshot(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("cannot write snapshot " + path.string());
  out << snapshot_text(corpus);
  if (!out) throw SnapshotError("failed writing snapshot " + path.string());
}

Corpus load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open snapshot " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_snapshot(text.str());
}

}  // namespace prosopo
