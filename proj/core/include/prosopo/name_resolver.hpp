#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosopo/types.hpp"

namespace prosopo {

class Corpus;

/// Context phrase that assigns a role when it occurs in a mention's context.
struct RoleRule {
  std::string pattern;
  MentionRole role;
  bool operator==(const RoleRule&) const = default;
};

/// Tunable lists used by normalization and role classification. Defaults
/// cover the French printed conventions of nineteenth-century articles.
struct ResolverConfig {
  std::vector<std::string> avant_noms{"M.", "MM.", "Mme", "Mlle", "le P."};
  /// Honorifics that mark the named person as living at publication time.
  std::vector<std::string> liveness_markers{"M.", "MM.", "Mme", "Mlle"};
  std::vector<std::string> qualifiers{"jeune géomètre",    "savant géomètre", "ce savant géomètre",
                                      "savant confrère",   "illustre géomètre", "mon ami",
                                      "notre ami"};
  /// Phrases naming a mathematical object after a person ("équation de Kepler").
  std::vector<std::string> genitive_markers{
      "équation de",  "équations de",  "formule de",   "formules de",  "série de",
      "séries de",    "nombre de",     "nombres de",   "théorème de",  "intégrale de",
      "polynôme de",  "polynômes de",  "transcendantes de", "transcendentes de",
      "indicatrice de"};
  std::vector<RoleRule> role_rules{
      {"journal de", MentionRole::journal_eponym},
      {"archives de", MentionRole::journal_eponym},
      {"bulletin de", MentionRole::journal_eponym},
      {"annales de", MentionRole::journal_eponym},
      {"présentée par", MentionRole::presenter},
      {"présenté par", MentionRole::presenter},
      {"traduction de", MentionRole::translator},
      {"traduit par", MentionRole::translator},
      {"lettre adressée à", MentionRole::letter_addressee},
      {"lettre de H. à", MentionRole::letter_addressee},
      {"mes élèves", MentionRole::student_of},
      {"mon élève", MentionRole::student_of},
      {"d'après les conseils de", MentionRole::encourager},
  };
  int min_year = 1800;
  int max_year = 1950;

  bool operator==(const ResolverConfig&) const = default;
};

/// Lowercases, applies compatibility decomposition, drops combining marks and
/// collapses punctuation to single spaces. Hyphens and apostrophes between two
/// letters or digits survive ("mittag-leffler").
std::string fold_text(std::string_view text);

/// Strips configured avant-noms and qualifiers from a printed name and folds the rest.
/// normalize_surface(n.key).key == n.key for every output n.
NormalizedName normalize_surface(std::string_view surface, const ResolverConfig& config = {});

/// Alias table first, then exact person key. Never matches partially.
std::optional<std::string> resolve_person(const NormalizedName& name, const Corpus& corpus);

/// Declared roles verbatim when present; otherwise the union of every rule that
/// fires on the folded context, defaulting to cited_author.
RoleSet classify_role(const RawMention& mention, const ResolverConfig& config = {});

/// Journal whose tenure covers (editor, year). Throws AmbiguousTenureError when
/// the editor ran two different journals that year. Input order is irrelevant.
std::optional<std::string> resolve_journal_eponym(std::string_view editor, int year,
                                                  std::span<const EditorTenure> tenures);
std::optional<std::string> resolve_journal_eponym(std::string_view editor, int year,
                                                  const Corpus& corpus);

/// Journal for a journal-eponym mention: a journal alias on the mention key wins,
/// otherwise the resolved editor's tenure at `year`.
std::optional<std::string> resolve_journal_phrase(const Mention& mention, int year,
                                                  const Corpus& corpus);

enum class Liveness { consistent, anomaly_m_for_dead, anomaly_bare_for_living, unknown };

std::string_view to_string(Liveness liveness) noexcept;

/// "M. X" printed after X's death, or a bare "X" while X was alive, is flagged.
/// Flags are informational. A missing death year yields unknown.
Liveness liveness_check(const NormalizedName& name, const Person& person, int article_year,
                        const ResolverConfig& config = {});

}  // namespace prosopo
