#include "prosopo/analytics.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"
#include "prosopo/name_resolver.hpp"

namespace prosopo {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::string kOutsidePeriods = "hors périodes";

std::string require_person(std::string_view person, const Corpus& corpus) {
  auto key = corpus.lookup_person(person);
  if (!key) key = corpus.lookup_person(normalize_surface(person, corpus.config()).key);
  if (!key) throw UnknownKeyError(std::string(person), corpus.keys_with_prefix(person));
  return *key;
}

ordered_json article_json(const DossierArticle& a) {
  ordered_json out = {{"article", a.article_id}, {"year", a.year}, {"venue", a.venue}};
  out["cluster"] = a.cluster ? ordered_json(*a.cluster) : ordered_json(nullptr);
  return out;
}

}  // namespace

PeriodScheme PeriodScheme::defaults() {
  return {{1800, 1860, 1880, 1951}, {"avant 1860", "entre 1860 et 1880", "après 1880"}, "toutes dates"};
}

void PeriodScheme::check() const {
  if (labels.empty()) throw InvalidArgument("a period scheme needs at least one period");
  if (boundaries.size() != labels.size() + 1) {
    throw InvalidArgument("a period scheme needs one more boundary than labels");
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) throw InvalidArgument("period boundaries must ascend strictly");
  }
}

std::optional<std::size_t> PeriodScheme::period_of(int year) const {
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (year >= boundaries[i] && year < boundaries[i + 1]) return i;
  }
  return std::nullopt;
}

std::string CohortBin::label() const {
  if (!lower && upper) return "n < " + std::to_string(*upper);
  if (lower && !upper) return "n > " + std::to_string(*lower);
  if (lower && upper) {
    return std::to_string(*lower) + " ≤ n " + (upper_inclusive ? "≤ " : "< ") + std::to_string(*upper);
  }
  return "n inconnue";
}

void CohortScheme::check() const {
  if (width <= 0) throw InvalidArgument("cohort width must be positive");
  if (end <= anchor) throw InvalidArgument("cohort range must end after its anchor");
}

std::vector<CohortBin> CohortScheme::bins() const {
  check();
  std::vector<CohortBin> out{{std::nullopt, anchor, false}};
  for (int lo = anchor; lo < end; lo += width) {
    const int hi = std::min(lo + width, end);
    out.push_back({lo, hi, hi == end});
  }
  return out;
}

CohortBin CohortScheme::overflow_bin() const { return {end, std::nullopt, false}; }

std::size_t CohortScheme::bin_index(int birth_year) const {
  check();
  const std::size_t regular = static_cast<std::size_t>((end - anchor + width - 1) / width);
  if (birth_year < anchor) return 0;
  if (birth_year > end) return regular + 1;
  const auto k = std::min(static_cast<std::size_t>((birth_year - anchor) / width), regular - 1);
  return 1 + k;
}

CohortBin CohortScheme::cohort_of(int birth_year) const {
  const auto all = bins();
  const std::size_t i = bin_index(birth_year);
  return i < all.size() ? all[i] : overflow_bin();
}

bool CitedFilter::accepts(const RoleSet& roles) const {
  if (roles.count(MentionRole::cited_author)) return true;
  return include_eponyms &&
         (roles.count(MentionRole::object_eponym) || roles.count(MentionRole::journal_eponym));
}

std::vector<std::set<std::string>> cited_by_period(const Corpus& corpus, const PeriodScheme& periods,
                                                   const CitedFilter& filter) {
  periods.check();
  std::vector<std::set<std::string>> out(periods.size());
  for (const auto& m : corpus.mentions()) {
    if (!m.person || !filter.accepts(m.roles)) continue;
    const Article* article = corpus.find_article(m.article_id);
    if (auto p = periods.period_of(article->year)) out[*p].insert(*m.person);
  }
  return out;
}

std::vector<std::string> stable_core(const Corpus& corpus, const PeriodScheme& periods,
                                     const CitedFilter& filter) {
  periods.check();
  if (periods.size() < 2) throw InvalidArgument("a stable core needs at least two periods");
  const auto sets = cited_by_period(corpus, periods, filter);
  std::set<std::string> core = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::set<std::string> next;
    std::set_intersection(core.begin(), core.end(), sets[i].begin(), sets[i].end(),
                          std::inserter(next, next.end()));
    core = std::move(next);
  }
  return {core.begin(), core.end()};
}

std::size_t citation_intensity(std::string_view person, const Corpus& corpus) {
  const std::string key = require_person(person, corpus);
  std::set<std::string> articles;
  for (std::size_t i : corpus.mentions_of_person(key)) {
    const Mention& m = corpus.mentions()[i];
    if (m.roles.count(MentionRole::cited_author)) articles.insert(m.article_id);
  }
  return articles.size();
}

Dossier transverse_query(std::string_view person, const Corpus& corpus, const std::vector<Cluster>& clusters,
                         const PeriodScheme& periods) {
  periods.check();
  const std::string key = require_person(person, corpus);
  std::map<std::string, int> cluster_of;
  for (const auto& c : clusters) {
    for (const auto& m : c.members) cluster_of[m] = c.id;
  }

  Dossier d;
  d.person = key;
  d.display_name = corpus.find_person(key)->display_name;
  std::set<std::string> qualifiers;
  std::set<std::string> citing_seen;
  for (std::size_t i : corpus.mentions_of_person(key)) {
    const Mention& m = corpus.mentions()[i];
    const Article& a = *corpus.find_article(m.article_id);
    const auto p = periods.period_of(a.year);
    const std::string& period = p ? periods.labels[*p] : kOutsidePeriods;

    DossierArticle entry{a.id, a.year, a.venue, std::nullopt};
    if (auto it = cluster_of.find(a.id); it != cluster_of.end()) entry.cluster = it->second;

    for (auto role : m.roles) {
      ++d.roles_by_period[period][role];
      auto& ids = d.articles_by_role[role];
      if (ids.empty() || ids.back() != a.id) ids.push_back(a.id);
    }
    if (m.roles.count(MentionRole::author)) d.authored.push_back(entry);
    if (m.roles.count(MentionRole::cited_author) && citing_seen.insert(a.id).second) d.citing.push_back(entry);
    if (m.roles.count(MentionRole::journal_eponym)) {
      std::optional<std::string> journal;
      try {
        journal = resolve_journal_phrase(m, a.year, corpus);
      } catch (const AmbiguousTenureError&) {
        journal = std::nullopt;
      }
      d.journal_eponyms.push_back({a.id, a.year, journal});
    }
    if (m.roles.count(MentionRole::translator)) d.translations.push_back(a.id);
    if (m.roles.count(MentionRole::letter_addressee) || m.roles.count(MentionRole::editor_addressee)) {
      d.letters.push_back(a.id);
    }
    qualifiers.insert(m.qualifiers.begin(), m.qualifiers.end());
    d.first_year = d.first_year ? std::min(*d.first_year, a.year) : a.year;
    d.last_year = d.last_year ? std::max(*d.last_year, a.year) : a.year;
  }
  d.qualifiers.assign(qualifiers.begin(), qualifiers.end());

  std::set<std::string> edited;
  for (const auto& t : corpus.tenures()) {
    if (std::find(t.editors.begin(), t.editors.end(), key) != t.editors.end()) edited.insert(t.journal_key);
  }
  d.tenures.assign(edited.begin(), edited.end());
  return d;
}

std::string dossier_json(const Dossier& d) {
  ordered_json out;
  out["person"] = d.person;
  out["display_name"] = d.display_name;
  out["first_year"] = d.first_year ? ordered_json(*d.first_year) : ordered_json(nullptr);
  out["last_year"] = d.last_year ? ordered_json(*d.last_year) : ordered_json(nullptr);

  ordered_json by_period = ordered_json::object();
  for (const auto& [period, roles] : d.roles_by_period) {
    ordered_json counts = ordered_json::object();
    for (const auto& [role, n] : roles) counts[std::string(to_string(role))] = n;
    by_period[period] = std::move(counts);
  }
  out["roles_by_period"] = std::move(by_period);

  ordered_json by_role = ordered_json::object();
  for (const auto& [role, ids] : d.articles_by_role) by_role[std::string(to_string(role))] = ids;
  out["articles_by_role"] = std::move(by_role);

  out["authored"] = ordered_json::array();
  for (const auto& a : d.authored) out["authored"].push_back(article_json(a));
  out["citing_count"] = d.citing.size();
  std::set<int> citing_clusters;
  out["citing"] = ordered_json::array();
  for (const auto& a : d.citing) {
    out["citing"].push_back(article_json(a));
    if (a.cluster) citing_clusters.insert(*a.cluster);
  }
  out["citing_clusters"] = std::vector<int>(citing_clusters.begin(), citing_clusters.end());

  out["journal_eponyms"] = ordered_json::array();
  for (const auto& j : d.journal_eponyms) {
    ordered_json item = {{"article", j.article_id}, {"year", j.year}};
    item["journal"] = j.journal ? ordered_json(*j.journal) : ordered_json(nullptr);
    out["journal_eponyms"].push_back(std::move(item));
  }
  out["tenures"] = d.tenures;
  out["translations"] = d.translations;
  out["letters"] = d.letters;
  out["qualifiers"] = d.qualifiers;
  return out.dump(2) + "\n";
}

WorkplaceDistribution workplace_distribution(const Corpus& corpus, const RoleSet& roles) {
  std::set<std::string> persons;
  for (const auto& m : corpus.mentions()) {
    if (!m.person) continue;
    const bool wanted = roles.empty() || std::any_of(m.roles.begin(), m.roles.end(),
                                                      [&](MentionRole r) { return roles.count(r) > 0; });
    if (wanted) persons.insert(*m.person);
  }

  WorkplaceDistribution dist;
  for (const auto& key : persons) {
    const Person* p = corpus.find_person(key);
    std::vector<std::string> regions;
    for (const auto& w : p->workplaces) {
      if (std::find(regions.begin(), regions.end(), w.region) == regions.end()) regions.push_back(w.region);
    }
    if (regions.empty()) regions.push_back(kUnknownRegion);
    for (const auto& r : regions) ++dist.by_region[r];
    ++dist.by_primary_region[regions.front()];
    if (regions.size() > 1) dist.multi_region.push_back(key);
    ++dist.persons;
    dist.region_assignments += regions.size();
  }
  return dist;
}

std::string render_distribution(const WorkplaceDistribution& dist) {
  std::vector<std::pair<std::string, std::size_t>> rows(dist.by_region.begin(), dist.by_region.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream out;
  out << "persons: " << dist.persons << '\n' << "region_assignments: " << dist.region_assignments << '\n';
  out << "region,any_workplace,primary_workplace\n";
  for (const auto& [region, n] : rows) {
    auto it = dist.by_primary_region.find(region);
    out << region << ',' << n << ',' << (it == dist.by_primary_region.end() ? 0 : it->second) << '\n';
  }
  out << "multi_region:";
  for (const auto& key : dist.multi_region) out << ' ' << key;
  out << '\n';
  return out.str();
}

NameSetDiff name_set_diff(const Corpus& a, const Corpus& b) {
  for (const auto& alias : a.aliases()) {
    const Alias* other = b.find_alias(alias.surface_key);
    if (other && (other->person_key != alias.person_key || other->journal_key != alias.journal_key)) {
      throw AmbiguousAliasError("alias tables disagree on '" + alias.surface_key + "'");
    }
  }
  auto names = [](const Corpus& c) {
    std::set<std::string> out;
    for (const auto& m : c.mentions()) {
      if (m.person) out.insert(*m.person);
    }
    return out;
  };
  const auto na = names(a);
  const auto nb = names(b);
  NameSetDiff diff;
  std::set_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(diff.only_a));
  std::set_difference(nb.begin(), nb.end(), na.begin(), na.end(), std::back_inserter(diff.only_b));
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(diff.both));
  return diff;
}

std::string name_set_diff_json(const NameSetDiff& diff) {
  ordered_json out;
  out["counts"] = {{"only_a", diff.only_a.size()}, {"only_b", diff.only_b.size()}, {"both", diff.both.size()}};
  out["only_a"] = diff.only_a;
  out["only_b"] = diff.only_b;
  out["both"] = diff.both;
  return out.dump(2) + "\n";
}

}  // namespace prosopo
