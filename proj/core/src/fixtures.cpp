#include "prosopo/fixtures.hpp"

#include <array>
#include <cstdio>
#include <random>

namespace prosopo {
namespace {

std::string numbered(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix, i);
  return buf;
}

}  // namespace

CorpusData generate_fixture(std::uint64_t seed, const FixtureOptions& o) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  static constexpr std::array<const char*, 5> kRegions{"France", "Germany", "Italy", "Russia", "United Kingdom"};
  static constexpr std::array<const char*, 6> kKeywords{"formes", "invariants", "fractions continues",
                                                        "fonctions elliptiques", "réduction", "équations"};
  static constexpr std::array<const char*, 3> kBooks{"Disquisitiones", "Traité", "Exercices"};

  CorpusData d;
  std::vector<std::string> names;
  for (int i = 0; i < o.persons; ++i) {
    Person p;
    p.key = numbered("p", i);
    p.display_name = numbered("Person ", i);
    if (chance(0.9)) {
      p.birth_year = uniform(1760, 1880);
      p.death_year = *p.birth_year + uniform(30, 90);
    }
    const int places = uniform(0, 2);
    for (int k = 0; k < places; ++k) p.workplaces.push_back({kRegions[uniform(0, kRegions.size() - 1)], {}, {}});
    if (chance(0.7)) p.professions.push_back(chance(0.7) ? "professeur d'université" : "ingénieur");
    names.push_back(p.display_name);
    d.aliases.push_back({fold_text(p.display_name), p.key, std::nullopt});
    d.persons.push_back(std::move(p));
  }

  const int n = uniform(1, o.max_articles);
  std::vector<int> authors;
  for (int i = 0; i < n; ++i) {
    Article a;
    a.id = numbered("art-", i);
    a.venue = numbered("venue-", uniform(1, o.venues));
    a.year = uniform(o.first_year, o.last_year);
    a.kind = chance(0.8) ? ArticleKind::research : ArticleKind::note;
    const int author = uniform(0, o.persons - 1);
    authors.push_back(author);
    a.mentions.push_back({names[author], std::nullopt, std::vector<MentionRole>{MentionRole::author}});
    const int cited = uniform(0, 4);
    for (int k = 0; k < cited; ++k) {
      const int who = uniform(0, o.persons - 1);
      RawMention m;
      m.surface = (chance(0.5) ? "M. " : "") + names[who];
      if (chance(0.2)) m.context = "théorème de";
      a.mentions.push_back(std::move(m));
      if (chance(0.1)) a.mentions.push_back({names[who], std::nullopt, std::nullopt});
    }
    const int keywords = uniform(0, 3);
    for (int k = 0; k < keywords; ++k) a.keywords.push_back(kKeywords[uniform(0, kKeywords.size() - 1)]);
    d.articles.push_back(std::move(a));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !chance(o.internal_reference_rate)) continue;
      RawReference r;
      r.author_surface = names[authors[j]];
      r.venue_surface = d.articles[j].venue;
      if (chance(0.7)) r.year = d.articles[j].year;
      d.articles[i].references.push_back(std::move(r));
    }
    if (chance(o.external_reference_rate)) {
      RawReference r;
      r.author_surface = names[uniform(0, o.persons - 1)];
      r.venue_surface = kBooks[uniform(0, kBooks.size() - 1)];
      r.year = uniform(1780, 1839);
      d.articles[i].references.push_back(std::move(r));
    }
  }

  const int links = uniform(0, 3);
  for (int k = 0; k < links; ++k) {
    const int a = uniform(0, o.persons - 1);
    const int b = uniform(0, o.persons - 1);
    if (a != b) d.links.push_back({d.persons[a].key, d.persons[b].key, LinkKind::correspondence, std::nullopt});
  }
  return d;
}

}  // namespace prosopo
