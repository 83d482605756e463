#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prosopo {

enum class ArticleKind { research, note, letter, translation, survey_course, other };

/// Functions a name can fill inside one article.
enum class MentionRole {
  author,
  cited_author,
  object_eponym,
  journal_eponym,
  editor_addressee,
  letter_addressee,
  translator,
  presenter,
  encourager,
  student_of,
  family,
  unresolved,
};

enum class LinkKind { correspondence, visit, course, family, other };

using RoleSet = std::set<MentionRole>;

std::string_view to_string(ArticleKind kind) noexcept;
std::string_view to_string(MentionRole role) noexcept;
std::string_view to_string(LinkKind kind) noexcept;
std::optional<ArticleKind> parse_article_kind(std::string_view text) noexcept;
std::optional<MentionRole> parse_mention_role(std::string_view text) noexcept;
std::optional<LinkKind> parse_link_kind(std::string_view text) noexcept;

struct Classification {
  std::string taxonomy_id;
  std::string rubric;
  auto operator<=>(const Classification&) const = default;
};

struct RawReference {
  std::string author_surface;
  std::optional<std::string> venue_surface;
  std::optional<int> year;
  std::optional<std::string> volume;
  std::optional<std::string> note;
  bool operator==(const RawReference&) const = default;
};

struct RawMention {
  std::string surface;  // as printed, e.g. "M. Hermite"
  std::optional<std::string> context;
  std::optional<std::vector<MentionRole>> declared_roles;
  bool operator==(const RawMention&) const = default;
};

struct Article {
  std::string id;
  std::string venue;
  std::optional<std::string> volume;
  int year = 0;
  std::optional<std::string> pages;
  ArticleKind kind = ArticleKind::research;
  std::vector<Classification> classifications;
  std::vector<std::string> keywords;
  std::vector<RawReference> references;
  std::vector<RawMention> mentions;
  std::optional<std::string> language;
  std::optional<std::string> translation_of;  // id of the original when this is a republication
  bool operator==(const Article&) const = default;
};

struct Workplace {
  std::string region;
  std::optional<int> from_year;
  std::optional<int> to_year;
  bool operator==(const Workplace&) const = default;
};

struct Person {
  std::string key;
  std::string display_name;
  std::optional<int> birth_year;
  std::optional<int> death_year;
  std::vector<Workplace> workplaces;
  std::vector<std::string> professions;
  std::vector<std::string> memberships;
  std::string notes;
  bool operator==(const Person&) const = default;
};

struct YearRange {
  int from_year = 0;
  int to_year = 0;
  auto operator<=>(const YearRange&) const = default;
};

struct PersonalLink {
  std::string a;
  std::string b;
  LinkKind link_kind = LinkKind::other;
  std::optional<YearRange> period;
  bool operator==(const PersonalLink&) const = default;
};

/// Maps a normalized surface key to a person, or (for historical journal names
/// such as "annales de gergonne") directly to a journal.
struct Alias {
  std::string surface_key;
  std::optional<std::string> person_key;
  std::optional<std::string> journal_key;
  bool operator==(const Alias&) const = default;
};

/// One editorship period. Several editors on one record means co-editorship.
struct EditorTenure {
  std::string journal_key;
  std::vector<std::string> editors;
  int from_year = 0;
  std::optional<int> to_year;
  bool operator==(const EditorTenure&) const = default;
};

struct NormalizedName {
  std::string key;
  std::vector<std::string> avant_noms;
  std::vector<std::string> qualifiers;
  std::string raw;
  bool operator==(const NormalizedName&) const = default;
};

/// One name inside one article after per-article deduplication.
struct Mention {
  std::string article_id;
  std::string key;
  std::optional<std::string> person;  // resolved person key
  RoleSet roles;
  std::vector<std::string> surfaces;
  std::vector<std::string> avant_noms;
  std::vector<std::string> qualifiers;
  std::vector<std::string> contexts;
  bool operator==(const Mention&) const = default;
};

/// A diagnostic attached to a record. Categories: "invariant", "liveness", "warning".
struct Finding {
  std::string record;
  std::string category;
  std::string message;
  auto operator<=>(const Finding&) const = default;
};

}  // namespace prosopo
