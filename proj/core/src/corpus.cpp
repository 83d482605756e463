#include "prosopo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "prosopo/error.hpp"
#include "records_json.hpp"

namespace prosopo {
namespace {

template <typename T>
void append_unique(std::vector<T>& out, const T& value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(value);
}

template <typename Range, typename Key>
auto find_sorted(const Range& range, std::string_view key, Key key_of) -> decltype(&*range.begin()) {
  auto it = std::lower_bound(range.begin(), range.end(), key,
                             [&](const auto& item, std::string_view k) { return key_of(item) < k; });
  if (it == range.end() || key_of(*it) != key) return nullptr;
  return &*it;
}

void sort_records(CorpusData& data) {
  std::sort(data.articles.begin(), data.articles.end(),
            [](const Article& a, const Article& b) { return a.id < b.id; });
  std::sort(data.persons.begin(), data.persons.end(),
            [](const Person& a, const Person& b) { return a.key < b.key; });
  std::sort(data.aliases.begin(), data.aliases.end(), [](const Alias& a, const Alias& b) {
    return std::tie(a.surface_key, a.person_key, a.journal_key) <
           std::tie(b.surface_key, b.person_key, b.journal_key);
  });
  data.aliases.erase(std::unique(data.aliases.begin(), data.aliases.end()), data.aliases.end());
  std::sort(data.tenures.begin(), data.tenures.end(), [](const EditorTenure& a, const EditorTenure& b) {
    return std::tie(a.journal_key, a.from_year, a.to_year, a.editors) <
           std::tie(b.journal_key, b.from_year, b.to_year, b.editors);
  });
  std::sort(data.links.begin(), data.links.end(), [](const PersonalLink& a, const PersonalLink& b) {
    return std::tie(a.a, a.b, a.link_kind, a.period) < std::tie(b.a, b.b, b.link_kind, b.period);
  });
}

void check_unique_keys(const CorpusData& data) {
  for (std::size_t i = 1; i < data.articles.size(); ++i) {
    if (data.articles[i].id == data.articles[i - 1].id) {
      throw DuplicateKeyError("duplicate article id '" + data.articles[i].id + "'");
    }
  }
  for (std::size_t i = 1; i < data.persons.size(); ++i) {
    if (data.persons[i].key == data.persons[i - 1].key) {
      throw DuplicateKeyError("duplicate person key '" + data.persons[i].key + "'");
    }
  }
  for (std::size_t i = 1; i < data.aliases.size(); ++i) {
    if (data.aliases[i].surface_key == data.aliases[i - 1].surface_key) {
      throw AmbiguousAliasError("alias '" + data.aliases[i].surface_key + "' has several targets");
    }
  }
}

}  // namespace

Corpus Corpus::build(CorpusData data, ResolverConfig config) {
  sort_records(data);
  check_unique_keys(data);

  Corpus corpus;
  corpus.data_ = std::move(data);
  corpus.config_ = std::move(config);
  const CorpusData& d = corpus.data_;

  for (const auto& alias : d.aliases) {
    if (alias.person_key && !corpus.find_person(*alias.person_key)) {
      corpus.warnings_.push_back({"alias:" + alias.surface_key, "warning",
                                  "alias target '" + *alias.person_key + "' is not a known person"});
    }
  }
  for (const auto& tenure : d.tenures) {
    for (const auto& editor : tenure.editors) {
      if (!corpus.find_person(editor)) {
        corpus.warnings_.push_back({"tenure:" + tenure.journal_key, "warning",
                                    "editor '" + editor + "' is not a known person"});
      }
    }
  }
  for (const auto& link : d.links) {
    for (const auto* end : {&link.a, &link.b}) {
      if (!corpus.find_person(*end)) {
        corpus.warnings_.push_back({"link:" + link.a + "-" + link.b, "warning",
                                    "link endpoint '" + *end + "' is not a known person"});
      }
    }
  }

  for (const auto& article : d.articles) {
    const std::size_t begin = corpus.mentions_.size();
    for (const auto& raw : article.mentions) {
      const NormalizedName name = normalize_surface(raw.surface, corpus.config_);
      const RoleSet roles = classify_role(raw, corpus.config_);
      auto it = std::find_if(corpus.mentions_.begin() + static_cast<std::ptrdiff_t>(begin),
                             corpus.mentions_.end(),
                             [&](const Mention& m) { return m.key == name.key; });
      if (it == corpus.mentions_.end()) {
        Mention m;
        m.article_id = article.id;
        m.key = name.key;
        m.person = resolve_person(name, corpus);
        corpus.mentions_.push_back(std::move(m));
        it = corpus.mentions_.end() - 1;
      }
      it->roles.insert(roles.begin(), roles.end());
      it->surfaces.push_back(raw.surface);
      for (const auto& a : name.avant_noms) append_unique(it->avant_noms, a);
      for (const auto& q : name.qualifiers) append_unique(it->qualifiers, q);
      if (raw.context) it->contexts.push_back(*raw.context);
    }
    corpus.article_mentions_[article.id] = {begin, corpus.mentions_.size()};
    corpus.by_venue_[article.venue].push_back(article.id);
    corpus.by_year_[article.year].push_back(article.id);
  }

  for (std::size_t i = 0; i < corpus.mentions_.size(); ++i) {
    const Mention& m = corpus.mentions_[i];
    corpus.by_key_[m.key].push_back(i);
    if (m.person) corpus.by_person_[*m.person].push_back(i);
  }
  std::sort(corpus.warnings_.begin(), corpus.warnings_.end());
  return corpus;
}

const Article* Corpus::find_article(std::string_view id) const {
  return find_sorted(data_.articles, id, [](const Article& a) -> const std::string& { return a.id; });
}

const Person* Corpus::find_person(std::string_view key) const {
  return find_sorted(data_.persons, key, [](const Person& p) -> const std::string& { return p.key; });
}

const Alias* Corpus::find_alias(std::string_view surface_key) const {
  return find_sorted(data_.aliases, surface_key,
                     [](const Alias& a) -> const std::string& { return a.surface_key; });
}

std::span<const Mention> Corpus::mentions_of(std::string_view article_id) const {
  auto it = article_mentions_.find(article_id);
  if (it == article_mentions_.end()) return {};
  return std::span<const Mention>(mentions_).subspan(it->second.first,
                                                     it->second.second - it->second.first);
}

std::span<const std::size_t> Corpus::mentions_of_person(std::string_view person_key) const {
  auto it = by_person_.find(person_key);
  if (it == by_person_.end()) return {};
  return it->second;
}

std::span<const std::size_t> Corpus::mentions_with_key(std::string_view key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return {};
  return it->second;
}

std::span<const std::string> Corpus::articles_in_venue(std::string_view venue) const {
  auto it = by_venue_.find(venue);
  if (it == by_venue_.end()) return {};
  return it->second;
}

std::span<const std::string> Corpus::articles_in_year(int year) const {
  auto it = by_year_.find(year);
  if (it == by_year_.end()) return {};
  return it->second;
}

std::optional<std::string> Corpus::lookup_person(std::string_view key) const {
  if (const Alias* alias = find_alias(key); alias && alias->person_key && find_person(*alias->person_key)) {
    return alias->person_key;
  }
  if (find_person(key)) return std::string(key);
  return std::nullopt;
}

std::vector<std::string> Corpus::keys_with_prefix(std::string_view prefix) const {
  std::set<std::string> keys;
  for (const auto& alias : data_.aliases) {
    if (alias.surface_key.starts_with(prefix)) keys.insert(alias.surface_key);
  }
  for (const auto& person : data_.persons) {
    if (person.key.starts_with(prefix)) keys.insert(person.key);
  }
  return {keys.begin(), keys.end()};
}

// ---------------------------------------------------------------------------
// JSON Lines files

namespace {

constexpr int kFileVersion = 1;

template <typename T, typename Parse>
std::vector<T> read_jsonl(const std::filesystem::path& path, std::string_view schema, bool lenient,
                          Parse parse) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<T> out;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    detail::json value;
    try {
      value = detail::json::parse(line);
    } catch (const detail::json::parse_error& e) {
      throw ParseError(path.string(), number, std::string("invalid JSON: ") + e.what());
    }
    try {
      if (!header_seen) {
        detail::ObjectReader header(value, "header", false);
        const std::string found = header.string("schema");
        const int version = header.integer("version");
        header.finish();
        if (found != schema) {
          throw detail::SchemaError("expected schema '" + std::string(schema) + "', found '" + found + "'");
        }
        if (version != kFileVersion) {
          throw detail::SchemaError("unsupported schema version " + std::to_string(version));
        }
        header_seen = true;
        continue;
      }
      out.push_back(parse(value, lenient));
    } catch (const detail::SchemaError& e) {
      throw ParseError(path.string(), number, e.what());
    } catch (const detail::json::exception& e) {
      throw ParseError(path.string(), number, e.what());
    }
  }
  return out;
}

template <typename T>
void write_jsonl(const std::filesystem::path& path, std::string_view schema, const std::vector<T>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << detail::json{{"schema", schema}, {"version", kFileVersion}}.dump() << '\n';
  for (const auto& record : records) out << detail::to_json(record).dump() << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

InputPaths InputPaths::in_directory(const std::filesystem::path& dir) {
  InputPaths paths;
  paths.articles = dir / "articles.jsonl";
  auto optional = [&](const char* name) -> std::optional<std::filesystem::path> {
    auto p = dir / name;
    if (std::filesystem::exists(p)) return p;
    return std::nullopt;
  };
  paths.persons = optional("persons.jsonl");
  paths.aliases = optional("aliases.jsonl");
  paths.tenures = optional("tenures.jsonl");
  paths.links = optional("links.jsonl");
  return paths;
}

CorpusData read_corpus_files(const InputPaths& paths, bool lenient) {
  CorpusData data;
  data.articles = read_jsonl<Article>(paths.articles, "articles", lenient, detail::article_from_json);
  if (paths.persons) {
    data.persons = read_jsonl<Person>(*paths.persons, "persons", lenient, detail::person_from_json);
  }
  if (paths.aliases) {
    data.aliases = read_jsonl<Alias>(*paths.aliases, "aliases", lenient, detail::alias_from_json);
  }
  if (paths.tenures) {
    data.tenures = read_jsonl<EditorTenure>(*paths.tenures, "tenures", lenient, detail::tenure_from_json);
  }
  if (paths.links) {
    data.links = read_jsonl<PersonalLink>(*paths.links, "links", lenient, detail::link_from_json);
  }
  return data;
}

Corpus ingest_corpus(const InputPaths& paths, const IngestOptions& options) {
  return Corpus::build(read_corpus_files(paths, options.lenient), options.config);
}

void write_corpus_files(const CorpusData& data, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_jsonl(dir / "articles.jsonl", "articles", data.articles);
  write_jsonl(dir / "persons.jsonl", "persons", data.persons);
  write_jsonl(dir / "aliases.jsonl", "aliases", data.aliases);
  write_jsonl(dir / "tenures.jsonl", "tenures", data.tenures);
  write_jsonl(dir / "links.jsonl", "links", data.links);
}

ResolverConfig parse_resolver_config(std::string_view json_text) {
  try {
    return detail::config_from_json(detail::json::parse(json_text));
  } catch (const detail::SchemaError& e) {
    throw Error(e.what());
  } catch (const detail::json::exception& e) {
    throw Error(std::string("invalid configuration: ") + e.what());
  }
}

ResolverConfig load_resolver_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_resolver_config(text.str());
}

}  // namespace prosopo
