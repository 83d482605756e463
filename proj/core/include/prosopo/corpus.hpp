#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosopo/name_resolver.hpp"
#include "prosopo/types.hpp"

namespace prosopo {

/// The raw record bases as read from disk.
struct CorpusData {
  std::vector<Article> articles;
  std::vector<Person> persons;
  std::vector<Alias> aliases;
  std::vector<EditorTenure> tenures;
  std::vector<PersonalLink> links;
  bool operator==(const CorpusData&) const = default;
};

/// Immutable, indexed article and person bases.
///
/// Records are held sorted by key, so the order of input lines never shows up
/// in a built corpus. Mentions are deduplicated per article on their normalized
/// key: role-sets, surfaces, qualifiers and contexts of repeated names merge.
class Corpus {
 public:
  Corpus() = default;

  /// Throws DuplicateKeyError on repeated article ids or person keys, and
  /// AmbiguousAliasError when one surface key maps to two targets.
  /// Dangling alias, tenure and link targets are kept and recorded as warnings.
  static Corpus build(CorpusData data, ResolverConfig config = {});

  const ResolverConfig& config() const noexcept { return config_; }
  const CorpusData& records() const noexcept { return data_; }
  std::span<const Article> articles() const noexcept { return data_.articles; }
  std::span<const Person> persons() const noexcept { return data_.persons; }
  std::span<const Alias> aliases() const noexcept { return data_.aliases; }
  std::span<const EditorTenure> tenures() const noexcept { return data_.tenures; }
  std::span<const PersonalLink> links() const noexcept { return data_.links; }
  std::span<const Mention> mentions() const noexcept { return mentions_; }
  std::span<const Finding> warnings() const noexcept { return warnings_; }

  const Article* find_article(std::string_view id) const;
  const Person* find_person(std::string_view key) const;
  const Alias* find_alias(std::string_view surface_key) const;

  std::span<const Mention> mentions_of(std::string_view article_id) const;
  /// Indices into mentions() for one resolved person, ordered by article id.
  std::span<const std::size_t> mentions_of_person(std::string_view person_key) const;
  std::span<const std::size_t> mentions_with_key(std::string_view key) const;
  std::span<const std::string> articles_in_venue(std::string_view venue) const;
  std::span<const std::string> articles_in_year(int year) const;

  /// Person key for an alias surface key or a person key (aliases first), else nullopt.
  std::optional<std::string> lookup_person(std::string_view key) const;
  /// Alias surface keys and person keys that start with `prefix`, sorted.
  std::vector<std::string> keys_with_prefix(std::string_view prefix) const;

  /// Record-for-record equality of the bases and the configuration.
  bool operator==(const Corpus& other) const {
    return data_ == other.data_ && config_ == other.config_;
  }

 private:
  CorpusData data_;
  ResolverConfig config_;
  std::vector<Mention> mentions_;
  std::vector<Finding> warnings_;
  std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>> article_mentions_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_person_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_key_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_venue_;
  std::map<int, std::vector<std::string>> by_year_;
};

struct InputPaths {
  std::filesystem::path articles;
  std::optional<std::filesystem::path> persons;
  std::optional<std::filesystem::path> aliases;
  std::optional<std::filesystem::path> tenures;
  std::optional<std::filesystem::path> links;

  /// The five conventional file names inside `dir`; absent files are skipped.
  static InputPaths in_directory(const std::filesystem::path& dir);
};

struct IngestOptions {
  ResolverConfig config;
  bool lenient = false;  // ignore unknown fields instead of rejecting the line
};

/// Reads the JSON Lines record files. Each non-empty file starts with a header
/// line {"schema": "<articles|persons|aliases|tenures|links>", "version": 1}.
/// Throws ParseError naming file and line on any malformed record.
CorpusData read_corpus_files(const InputPaths& paths, bool lenient = false);
Corpus ingest_corpus(const InputPaths& paths, const IngestOptions& options = {});

/// Writes the five record files (with headers) into `dir`.
void write_corpus_files(const CorpusData& data, const std::filesystem::path& dir);

struct ValidationReport {
  std::vector<Finding> findings;  // sorted by record, category, message
  std::size_t unresolved_mentions = 0;
  std::size_t unresolved_references = 0;

  bool clean() const noexcept { return findings.empty(); }
  /// Deterministic text form, one finding per line, ending with a newline.
  std::string render() const;
};

/// Type invariants, ingestion warnings and liveness anomalies. Pure function of the corpus.
ValidationReport validate_corpus(const Corpus& corpus);

inline constexpr std::string_view kSnapshotMagic = "PROSO";
inline constexpr std::string_view kSnapshotVersion = "v1";

/// Snapshot layout: the line "PROSO v1", then one JSON document holding the
/// resolver configuration and the five record bases.
void save_snapshot(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_snapshot(const std::filesystem::path& path);
std::string snapshot_text(const Corpus& corpus);
Corpus parse_snapshot(std::string_view text);

ResolverConfig load_resolver_config(const std::filesystem::path& path);
/// Reads resolver settings from a JSON document; keys absent from it keep their defaults.
ResolverConfig parse_resolver_config(std::string_view json_text);

}  // namespace prosopo
