#include "prosopo/name_resolver.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <set>

#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"

namespace prosopo {
namespace {

bool is_word_char(UChar32 c) { return u_isalnum(c) != 0; }

bool is_joiner(UChar32 c) { return c == '-' || c == '\'' || c == 0x2010 || c == 0x2019 || c == 0x02BC; }

UChar32 canonical_joiner(UChar32 c) { return (c == '-' || c == 0x2010) ? UChar32{'-'} : UChar32{'\''}; }

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    // ASCII whitespace, U+00A0 and U+202F all separate words.
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      flush();
      ++i;
    } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x80 &&
               static_cast<unsigned char>(text[i + 2]) == 0xAF) {
      flush();
      i += 2;
    } else {
      current += c;
    }
  }
  flush();
  return words;
}

std::string join_words(const std::vector<std::string>& words, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < words.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

std::string trim(std::string_view text) {
  return join_words(split_words(text));
}

bool starts_with_words(const std::vector<std::string>& words, std::size_t at,
                       const std::vector<std::string>& prefix) {
  if (words.size() - at < prefix.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), words.begin() + static_cast<std::ptrdiff_t>(at));
}

struct Phrase {
  std::string original;
  std::vector<std::string> words;
};

// Longest phrases first so "ce savant géomètre" wins over "savant géomètre".
std::vector<Phrase> phrases(const std::vector<std::string>& items, bool fold) {
  std::vector<Phrase> out;
  for (const auto& item : items) {
    auto words = split_words(fold ? fold_text(item) : item);
    if (!words.empty()) out.push_back({item, std::move(words)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Phrase& a, const Phrase& b) {
    return a.words.size() > b.words.size();
  });
  return out;
}

bool contains_phrase(const std::string& padded_text, const std::string& pattern) {
  const std::string folded = fold_text(pattern);
  if (folded.empty()) return false;
  return padded_text.find(" " + folded + " ") != std::string::npos;
}

}  // namespace

std::string fold_text(std::string_view text) {
  icu::UnicodeString source =
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  source.toLower(icu::Locale::getRoot());

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw Error("ICU compatibility decomposition unavailable");
  const icu::UnicodeString decomposed = nfkd->normalize(source, status);
  if (U_FAILURE(status)) throw Error("ICU failed to decompose text");

  std::vector<UChar32> points;
  points.reserve(static_cast<std::size_t>(decomposed.length()));
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    i += U16_LENGTH(c);
    if (u_charType(c) == U_NON_SPACING_MARK) continue;
    points.push_back(c);
  }

  icu::UnicodeString folded;
  bool pending_space = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UChar32 c = points[i];
    bool keep = is_word_char(c);
    if (!keep && is_joiner(c) && i > 0 && i + 1 < points.size() && is_word_char(points[i - 1]) &&
        is_word_char(points[i + 1])) {
      keep = true;
      c = canonical_joiner(c);
    }
    if (!keep) {
      pending_space = !folded.isEmpty();
      continue;
    }
    if (pending_space) folded.append(UChar32{' '});
    pending_space = false;
    folded.append(c);
  }

  std::string out;
  folded.toUTF8String(out);
  return out;
}

NormalizedName normalize_surface(std::string_view surface, const ResolverConfig& config) {
  NormalizedName name;
  name.raw = std::string(surface);

  const auto qualifier_phrases = phrases(config.qualifiers, /*fold=*/true);
  auto is_qualifier = [&](const std::string& folded) {
    const auto words = split_words(folded);
    return std::any_of(qualifier_phrases.begin(), qualifier_phrases.end(),
                       [&](const Phrase& q) { return q.words == words; });
  };

  // Trailing ", qualifier" segments.
  std::string head;
  std::size_t start = 0;
  bool first = true;
  while (start <= surface.size()) {
    std::size_t comma = surface.find(',', start);
    if (comma == std::string_view::npos) comma = surface.size();
    const std::string_view segment = surface.substr(start, comma - start);
    if (!first && is_qualifier(fold_text(segment))) {
      name.qualifiers.push_back(trim(segment));
    } else {
      if (!first) head += ',';
      head += segment;
    }
    first = false;
    start = comma + 1;
  }

  // Leading avant-noms, matched on the printed form.
  const auto prefixes = phrases(config.avant_noms, /*fold=*/false);
  auto words = split_words(head);
  std::size_t at = 0;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (const auto& p : prefixes) {
      if (words.size() - at > p.words.size() && starts_with_words(words, at, p.words)) {
        name.avant_noms.push_back(p.original);
        at += p.words.size();
        stripped = true;
        break;
      }
    }
  }

  // Leading qualifiers, matched on folded words; an avant-nom may follow one.
  auto folded_words = split_words(fold_text(join_words(words, at)));
  const auto folded_prefixes = phrases(config.avant_noms, /*fold=*/true);
  std::size_t fat = 0;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (const auto& q : qualifier_phrases) {
      if (folded_words.size() - fat > q.words.size() && starts_with_words(folded_words, fat, q.words)) {
        name.qualifiers.push_back(q.original);
        fat += q.words.size();
        stripped = true;
        for (const auto& p : folded_prefixes) {
          if (folded_words.size() - fat > p.words.size() &&
              starts_with_words(folded_words, fat, p.words)) {
            name.avant_noms.push_back(p.original);
            fat += p.words.size();
            break;
          }
        }
        break;
      }
    }
  }

  name.key = join_words(folded_words, fat);
  return name;
}

std::optional<std::string> resolve_person(const NormalizedName& name, const Corpus& corpus) {
  if (const Alias* alias = corpus.find_alias(name.key); alias && alias->person_key) {
    if (corpus.find_person(*alias->person_key)) return alias->person_key;
  }
  if (corpus.find_person(name.key)) return name.key;
  return std::nullopt;
}

RoleSet classify_role(const RawMention& mention, const ResolverConfig& config) {
  if (mention.declared_roles && !mention.declared_roles->empty()) {
    return RoleSet(mention.declared_roles->begin(), mention.declared_roles->end());
  }
  RoleSet roles;
  if (mention.context) {
    const std::string padded = " " + fold_text(*mention.context) + " ";
    for (const auto& marker : config.genitive_markers) {
      if (contains_phrase(padded, marker)) {
        roles.insert(MentionRole::object_eponym);
        break;
      }
    }
    for (const auto& rule : config.role_rules) {
      if (contains_phrase(padded, rule.pattern)) roles.insert(rule.role);
    }
  }
  if (roles.empty()) roles.insert(MentionRole::cited_author);
  return roles;
}

std::optional<std::string> resolve_journal_eponym(std::string_view editor, int year,
                                                  std::span<const EditorTenure> tenures) {
  std::set<std::string> journals;
  for (const auto& tenure : tenures) {
    if (year < tenure.from_year || (tenure.to_year && year > *tenure.to_year)) continue;
    if (std::find(tenure.editors.begin(), tenure.editors.end(), editor) != tenure.editors.end()) {
      journals.insert(tenure.journal_key);
    }
  }
  if (journals.empty()) return std::nullopt;
  if (journals.size() > 1) {
    throw AmbiguousTenureError(std::vector<std::string>(journals.begin(), journals.end()));
  }
  return *journals.begin();
}

std::optional<std::string> resolve_journal_eponym(std::string_view editor, int year,
                                                  const Corpus& corpus) {
  return resolve_journal_eponym(editor, year, corpus.tenures());
}

std::optional<std::string> resolve_journal_phrase(const Mention& mention, int year,
                                                  const Corpus& corpus) {
  if (const Alias* alias = corpus.find_alias(mention.key); alias && alias->journal_key) {
    return alias->journal_key;
  }
  if (!mention.person) return std::nullopt;
  return resolve_journal_eponym(*mention.person, year, corpus);
}

std::string_view to_string(Liveness liveness) noexcept {
  switch (liveness) {
    case Liveness::consistent: return "consistent";
    case Liveness::anomaly_m_for_dead: return "anomaly_m_for_dead";
    case Liveness::anomaly_bare_for_living: return "anomaly_bare_for_living";
    case Liveness::unknown: return "unknown";
  }
  return "unknown";
}

Liveness liveness_check(const NormalizedName& name, const Person& person, int article_year,
                        const ResolverConfig& config) {
  if (!person.death_year) return Liveness::unknown;
  const bool marked = std::any_of(name.avant_noms.begin(), name.avant_noms.end(), [&](const auto& a) {
    return std::find(config.liveness_markers.begin(), config.liveness_markers.end(), a) !=
           config.liveness_markers.end();
  });
  if (marked) {
    return *person.death_year < article_year ? Liveness::anomaly_m_for_dead : Liveness::consistent;
  }
  // The year of death itself is ambiguous either way and is not flagged.
  const bool alive = *person.death_year > article_year &&
                     (!person.birth_year || *person.birth_year <= article_year);
  return alive ? Liveness::anomaly_bare_for_living : Liveness::consistent;
}

}  // namespace prosopo
