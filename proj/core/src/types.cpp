#include "prosopo/types.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "prosopo/error.hpp"
#include "prosopo/fraction.hpp"

namespace prosopo {
namespace {

constexpr std::array<std::pair<ArticleKind, std::string_view>, 6> kArticleKinds{{
    {ArticleKind::research, "research"},
    {ArticleKind::note, "note"},
    {ArticleKind::letter, "letter"},
    {ArticleKind::translation, "translation"},
    {ArticleKind::survey_course, "survey-course"},
    {ArticleKind::other, "other"},
}};

constexpr std::array<std::pair<MentionRole, std::string_view>, 12> kRoles{{
    {MentionRole::author, "author"},
    {MentionRole::cited_author, "cited_author"},
    {MentionRole::object_eponym, "object_eponym"},
    {MentionRole::journal_eponym, "journal_eponym"},
    {MentionRole::editor_addressee, "editor_addressee"},
    {MentionRole::letter_addressee, "letter_addressee"},
    {MentionRole::translator, "translator"},
    {MentionRole::presenter, "presenter"},
    {MentionRole::encourager, "encourager"},
    {MentionRole::student_of, "student_of"},
    {MentionRole::family, "family"},
    {MentionRole::unresolved, "unresolved"},
}};

constexpr std::array<std::pair<LinkKind, std::string_view>, 5> kLinkKinds{{
    {LinkKind::correspondence, "correspondence"},
    {LinkKind::visit, "visit"},
    {LinkKind::course, "course"},
    {LinkKind::family, "family"},
    {LinkKind::other, "other"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> value_of(const std::array<std::pair<Enum, std::string_view>, N>& table,
                             std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

std::string_view to_string(ArticleKind kind) noexcept { return name_of(kArticleKinds, kind); }
std::string_view to_string(MentionRole role) noexcept { return name_of(kRoles, role); }
std::string_view to_string(LinkKind kind) noexcept { return name_of(kLinkKinds, kind); }

std::optional<ArticleKind> parse_article_kind(std::string_view text) noexcept {
  return value_of(kArticleKinds, text);
}
std::optional<MentionRole> parse_mention_role(std::string_view text) noexcept {
  return value_of(kRoles, text);
}
std::optional<LinkKind> parse_link_kind(std::string_view text) noexcept {
  return value_of(kLinkKinds, text);
}

AmbiguousTenureError::AmbiguousTenureError(std::vector<std::string> journals)
    : Error("ambiguous tenure: editor ran several journals that year: " + join(journals)),
      journals_(std::move(journals)) {}

UnknownKeyError::UnknownKeyError(const std::string& key, std::vector<std::string> suggestions)
    : Error("unknown key '" + key + "'" +
            (suggestions.empty() ? std::string() : "; did you mean: " + join(suggestions))),
      suggestions_(std::move(suggestions)) {}

Fraction Fraction::from_decimal(double value) {
  constexpr std::int64_t kScale = 1'000'000'000;
  return Fraction(std::llround(value * static_cast<double>(kScale)), kScale);
}

}  // namespace prosopo
