#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "prosopo/citation_graph.hpp"
#include "prosopo/types.hpp"

namespace prosopo {

class Corpus;

/// Half-open publication periods [boundaries[i], boundaries[i+1]).
struct PeriodScheme {
  std::vector<int> boundaries;
  std::vector<std::string> labels;
  std::string all_label = "toutes dates";

  /// Before 1860, 1860-1880, from 1880 on, over the default year bounds.
  static PeriodScheme defaults();
  /// Throws InvalidArgument unless boundaries ascend strictly and match the labels.
  void check() const;
  std::size_t size() const noexcept { return labels.size(); }
  std::optional<std::size_t> period_of(int year) const;
};

/// One birth-year bin; absent bounds are open. `upper_inclusive` marks the closing bin.
struct CohortBin {
  std::optional<int> lower;
  std::optional<int> upper;
  bool upper_inclusive = false;
  std::string label() const;
  bool operator==(const CohortBin&) const = default;
};

/// Birth cohorts: everything before `anchor`, then `width`-year bins from the
/// anchor, the last one closed at `end`. Births after `end` fall in an open bin.
struct CohortScheme {
  int anchor = 1790;
  int width = 20;
  int end = 1870;

  void check() const;
  /// The regular bins: below-anchor first, closed last bin at the end.
  std::vector<CohortBin> bins() const;
  CohortBin overflow_bin() const;
  /// Index into bins(), or bins().size() for births after `end`.
  std::size_t bin_index(int birth_year) const;
  CohortBin cohort_of(int birth_year) const;
};

/// Counts of distinct persons, period rows by cohort columns, plus the
/// all-periods row holding the size of the union over periods.
struct CrossTab {
  std::string corner = "Auteurs cités";
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::size_t>> cells;
  std::string all_label = "toutes dates";
  std::vector<std::size_t> all;

  bool operator==(const CrossTab&) const = default;
};

struct CitedFilter {
  /// Count object- and journal-eponym mentions as citations too.
  bool include_eponyms = false;
  bool accepts(const RoleSet& roles) const;
};

/// Period by birth-cohort table of cited authors. Persons without a birth year
/// go to an "inconnue" column; the after-end column appears only when used.
CrossTab generation_crosstab(const Corpus& corpus, const PeriodScheme& periods,
                             const CohortScheme& cohorts, const CitedFilter& filter = {});

struct RenderOptions {
  bool blank_zeros = true;  // zero cells print empty, as in printed tables
};

/// Fixed-width text table: left-aligned row labels, right-aligned counts,
/// " | " separators, a dashed rule under the header, no trailing spaces.
std::string render_crosstab(const CrossTab& tab, const RenderOptions& options = {});
std::string render_crosstab_csv(const CrossTab& tab);
/// Pre-aggregated table: {"corner","rows","cols","cells","all_label","all"}.
CrossTab parse_crosstab_json(std::string_view json_text);
std::string crosstab_json(const CrossTab& tab);

/// Resolved persons cited in each period, one set per period.
std::vector<std::set<std::string>> cited_by_period(const Corpus& corpus,
                                                   const PeriodScheme& periods,
                                                   const CitedFilter& filter = {});

/// Persons cited in every period. Throws InvalidArgument with fewer than two periods.
std::vector<std::string> stable_core(const Corpus& corpus, const PeriodScheme& periods,
                                     const CitedFilter& filter = {});

/// Number of distinct articles citing the person. Throws UnknownKeyError.
std::size_t citation_intensity(std::string_view person, const Corpus& corpus);

struct DossierArticle {
  std::string article_id;
  int year = 0;
  std::string venue;
  std::optional<int> cluster;
};

struct JournalReference {
  std::string article_id;
  int year = 0;
  std::optional<std::string> journal;
};

/// Everything the corpus records about one person, across all roles.
struct Dossier {
  std::string person;
  std::string display_name;
  std::map<std::string, std::map<MentionRole, std::size_t>> roles_by_period;
  std::map<MentionRole, std::vector<std::string>> articles_by_role;
  std::vector<DossierArticle> authored;
  std::vector<DossierArticle> citing;
  std::vector<JournalReference> journal_eponyms;
  std::vector<std::string> tenures;  // journals the person edited, per the tenure base
  std::vector<std::string> translations;
  std::vector<std::string> letters;
  std::vector<std::string> qualifiers;
  std::optional<int> first_year;
  std::optional<int> last_year;
};

/// Accepts a person key or an alias surface key. Unknown keys raise
/// UnknownKeyError carrying prefix-matching keys as suggestions.
Dossier transverse_query(std::string_view person, const Corpus& corpus,
                         const std::vector<Cluster>& clusters,
                         const PeriodScheme& periods = PeriodScheme::defaults());
std::string dossier_json(const Dossier& dossier);

struct WorkplaceDistribution {
  std::map<std::string, std::size_t> by_region;          // each region of each person once
  std::map<std::string, std::size_t> by_primary_region;  // first listed workplace only
  std::vector<std::string> multi_region;                 // persons counted in several regions
  std::size_t persons = 0;
  std::size_t region_assignments = 0;
};

inline const std::string kUnknownRegion = "unknown";

/// Regions of the resolved persons mentioned with any role in `roles`.
WorkplaceDistribution workplace_distribution(const Corpus& corpus,
                                             const RoleSet& roles = {MentionRole::cited_author});
std::string render_distribution(const WorkplaceDistribution& dist);

struct NameSetDiff {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  std::vector<std::string> both;
};

/// Resolved person keys mentioned in any role. Throws AmbiguousAliasError when
/// the two alias tables send one surface key to different targets.
NameSetDiff name_set_diff(const Corpus& a, const Corpus& b);
std::string name_set_diff_json(const NameSetDiff& diff);

}  // namespace prosopo
