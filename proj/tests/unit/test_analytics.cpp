#include <doctest.h>

#include <json.hpp>

#include "support.hpp"

using namespace prosopo;

namespace {

Article article(std::string id, int year, std::vector<RawMention> mentions) {
  Article a;
  a.id = std::move(id);
  a.venue = "CRAS";
  a.year = year;
  a.mentions = std::move(mentions);
  return a;
}

RawMention named(std::string surface, std::optional<std::string> context = std::nullopt) {
  return {std::move(surface), std::move(context), std::nullopt};
}

Person born(std::string key, std::optional<int> birth) {
  Person p;
  p.key = key;
  p.display_name = std::move(key);
  p.birth_year = birth;
  return p;
}

std::string column(const CrossTab& t, std::size_t row, const std::string& col) {
  auto it = std::find(t.cols.begin(), t.cols.end(), col);
  if (it == t.cols.end()) return "missing";
  const std::size_t c = static_cast<std::size_t>(it - t.cols.begin());
  return std::to_string(row == t.rows.size() ? t.all[c] : t.cells[row][c]);
}

}  // namespace

TEST_CASE("period scheme") {
  const auto p = PeriodScheme::defaults();
  CHECK(p.size() == 3);
  CHECK(p.period_of(1859) == 0u);
  CHECK(p.period_of(1860) == 1u);
  CHECK(p.period_of(1879) == 1u);
  CHECK(p.period_of(1880) == 2u);
  CHECK(p.period_of(1950) == 2u);
  CHECK(p.period_of(1800) == 0u);
  CHECK_FALSE(p.period_of(1799).has_value());
  CHECK_FALSE(p.period_of(1951).has_value());
  CHECK_NOTHROW(p.check());
  CHECK_THROWS_AS((PeriodScheme{{1800, 1800}, {"x"}}).check(), InvalidArgument);
  CHECK_THROWS_AS((PeriodScheme{{1800, 1900}, {"x", "y"}}).check(), InvalidArgument);
  CHECK_THROWS_AS((PeriodScheme{{1800}, {}}).check(), InvalidArgument);
}

TEST_CASE("cohort assignment") {
  const CohortScheme s;
  CHECK(s.cohort_of(1822).label() == "1810 ≤ n < 1830");
  CHECK(s.cohort_of(1805).label() == "1790 ≤ n < 1810");
  CHECK(s.cohort_of(1809).label() == "1790 ≤ n < 1810");
  CHECK(s.cohort_of(1810).label() == "1810 ≤ n < 1830");
  CHECK(s.cohort_of(1790).label() == "1790 ≤ n < 1810");
  CHECK(s.cohort_of(1789).label() == "n < 1790");
  CHECK(s.cohort_of(1850).label() == "1850 ≤ n ≤ 1870");
  CHECK(s.cohort_of(1870).label() == "1850 ≤ n ≤ 1870");
  CHECK(s.cohort_of(1871).label() == "n > 1870");
  CHECK(s.bins().size() == 5);
  CHECK(s.bin_index(1871) == 5);
  CHECK(s.overflow_bin().label() == "n > 1870");
  CHECK(CohortBin{}.label() == "n inconnue");

  const CohortScheme decades{1800, 10, 1830};
  CHECK(decades.cohort_of(1815).label() == "1810 ≤ n < 1820");
  CHECK(decades.cohort_of(1830).label() == "1820 ≤ n ≤ 1830");
  CHECK_THROWS_AS((CohortScheme{1790, 0, 1870}).check(), InvalidArgument);
  CHECK_THROWS_AS((CohortScheme{1790, 20, 1780}).check(), InvalidArgument);
}

TEST_CASE("cohort bins tile the years") {
  const CohortScheme s;
  for (int year = 1700; year <= 1900; ++year) {
    const CohortBin b = s.cohort_of(year);
    const bool above = !b.lower || year >= *b.lower;
    const bool below = !b.upper || (b.upper_inclusive ? year <= *b.upper : year < *b.upper);
    CHECK_MESSAGE((above && below), year);
  }
}

TEST_CASE("crosstab all-periods row is a union, not a sum") {
  CorpusData d;
  d.persons = {born("x", 1795), born("y", 1795)};
  d.articles = {article("p1", 1850, {named("X")}), article("p2a", 1865, {named("X")}),
                article("p2b", 1870, {named("Y")})};
  const auto t = generation_crosstab(Corpus::build(d), PeriodScheme::defaults(), CohortScheme{});
  const std::string col = "1790 ≤ n < 1810";
  CHECK(column(t, 0, col) == "1");
  CHECK(column(t, 1, col) == "2");
  CHECK(column(t, 2, col) == "0");
  CHECK(column(t, 3, col) == "2");
  CHECK(t.cols.size() == 5);
  CHECK(t.rows == PeriodScheme::defaults().labels);
}

TEST_CASE("crosstab columns for unknown and late births") {
  CorpusData d;
  d.persons = {born("x", std::nullopt), born("y", 1880)};
  d.articles = {article("a", 1890, {named("X"), named("Y"), named("Z")})};
  const auto t = generation_crosstab(Corpus::build(d), PeriodScheme::defaults(), CohortScheme{});
  REQUIRE(t.cols.size() == 7);
  CHECK(t.cols[5] == "n > 1870");
  CHECK(t.cols[6] == "n inconnue");
  CHECK(column(t, 2, "n inconnue") == "1");
  CHECK(column(t, 2, "n > 1870") == "1");
}

TEST_CASE("eponymous uses are not citations unless asked") {
  CorpusData d;
  d.persons = {born("kepler", 1571), born("crelle", 1780)};
  d.articles = {article("a", 1876, {named("Kepler", "équation de"), named("Crelle", "journal de")})};
  const Corpus c = Corpus::build(d);
  const auto plain = generation_crosstab(c, PeriodScheme::defaults(), CohortScheme{});
  CHECK(column(plain, 3, "n < 1790") == "0");
  const auto all = generation_crosstab(c, PeriodScheme::defaults(), CohortScheme{}, CitedFilter{true});
  CHECK(column(all, 3, "n < 1790") == "2");
}

TEST_CASE("published table renders byte-exact") {
  const auto tab = parse_crosstab_json(test::read_text(test::data_dir() / "published-counts" / "crosstab.json"));
  const std::string golden = test::read_text(test::data_dir() / "published-counts" / "table.txt");
  CHECK(render_crosstab(tab) == golden);
  CHECK(tab.cells[1] == std::vector<std::size_t>{10, 17, 30, 16, 2});
  CHECK(tab.all == std::vector<std::size_t>{12, 24, 39, 31, 17});
  CHECK(parse_crosstab_json(crosstab_json(tab)) == tab);
  CHECK(render_crosstab_csv(tab).find("entre 1860 et 1880,10,17,30,16,2\n") != std::string::npos);
}

TEST_CASE("rendering edge cases") {
  CrossTab empty;
  const std::string header_only = render_crosstab(empty);
  CHECK(header_only == "Auteurs cités\n-------------\n");

  CrossTab one;
  one.rows = {"p"};
  one.cols = {"c"};
  one.cells = {{5}};
  one.all = {5};
  CHECK(render_crosstab(one) ==
        "Auteurs cités | c\n"
        "--------------+--\n"
        "p             | 5\n"
        "toutes dates  | 5\n");

  one.cells = {{0}};
  one.all = {0};
  CHECK(render_crosstab(one).find("p             |\n") != std::string::npos);
  CHECK(render_crosstab(one, {false}).find("p             | 0\n") != std::string::npos);
}

TEST_CASE("pre-aggregated tables must be consistent") {
  CHECK_THROWS_AS(parse_crosstab_json(R"({"rows":["a"],"cols":["c"],"cells":[[3]],"all":[2]})"), Error);
  CHECK_THROWS_AS(parse_crosstab_json(R"({"rows":["a","b"],"cols":["c"],"cells":[[1],[1]],"all":[3]})"), Error);
  CHECK_THROWS_AS(parse_crosstab_json(R"({"rows":["a"],"cols":["c","d"],"cells":[[1]],"all":[1,1]})"), Error);
  CHECK_THROWS_AS(parse_crosstab_json("{"), Error);
  CHECK_NOTHROW(parse_crosstab_json(R"({"rows":["a","b"],"cols":["c"],"cells":[[1],[1]],"all":[2]})"));
}

TEST_CASE("stable core") {
  CorpusData d;
  d.persons = {born("jacobi", 1804), born("gauss", 1777), born("abel", 1802), born("picard", 1856)};
  d.articles = {article("a", 1850, {named("Jacobi"), named("Gauss"), named("Abel")}),
                article("b", 1870, {named("Jacobi"), named("Gauss")}),
                article("c", 1890, {named("Gauss"), named("M. Picard"), named("Jacobi")})};
  const Corpus c = Corpus::build(d);
  CHECK(stable_core(c, PeriodScheme::defaults()) == std::vector<std::string>{"gauss", "jacobi"});
  CHECK_THROWS_AS(stable_core(c, PeriodScheme{{1800, 1951}, {"all"}}), InvalidArgument);

  d.articles = {article("a", 1850, {named("Abel")}), article("b", 1870, {named("Gauss")}),
                article("c", 1890, {named("Picard")})};
  CHECK(stable_core(Corpus::build(d), PeriodScheme::defaults()).empty());
}

TEST_CASE("citation intensity counts articles, not mentions") {
  CorpusData d;
  d.persons = {born("cauchy", 1789), born("liouville", 1809)};
  d.articles = {article("a", 1860, {named("Cauchy"), named("M. Cauchy", "théorème de")}),
                article("b", 1861, {named("Cauchy")}), article("c", 1862, {named("Cauchy", "théorème de")}),
                article("d", 1863, {})};
  const Corpus c = Corpus::build(d);
  CHECK(citation_intensity("cauchy", c) == 2);
  CHECK(citation_intensity("liouville", c) == 0);
  CHECK_THROWS_AS(citation_intensity("nobody", c), UnknownKeyError);
}

TEST_CASE("transverse query on the 1876 articles") {
  const Corpus c = test::load_dir("hermite-1876");
  const auto clusters = compute_clusters(build_citation_graph(c));

  const Dossier e = transverse_query("eisenstein", c, clusters);
  REQUIRE(e.citing.size() == 1);
  CHECK(e.citing[0].article_id == "1876-plms-7");
  CHECK(e.citing[0].venue == "Proceedings of the London Mathematical Society");
  CHECK(e.citing[0].cluster.has_value());
  CHECK(e.articles_by_role.size() == 1);
  CHECK(e.roles_by_period.at("entre 1860 et 1880").at(MentionRole::cited_author) == 1);

  const Dossier k = transverse_query("kepler", c, clusters);
  CHECK(k.articles_by_role.size() == 1);
  CHECK(k.articles_by_role.at(MentionRole::object_eponym) == std::vector<std::string>{"1876-plms-7"});
  CHECK(k.citing.empty());

  const Dossier m = transverse_query("M. Paul Mansion", c, clusters);
  CHECK(m.person == "mansion");
  CHECK(m.letters == std::vector<std::string>{"1876-ncm-2"});

  const Dossier cr = transverse_query("crelle", c, clusters);
  REQUIRE(cr.journal_eponyms.size() == 2);
  CHECK(cr.journal_eponyms[0].journal == "journal-reine-angewandte");
  CHECK(cr.tenures == std::vector<std::string>{"journal-reine-angewandte"});

  const Dossier h = transverse_query("hermite", c, clusters);
  CHECK(h.authored.size() == 4);
  CHECK(h.first_year == 1876);

  try {
    transverse_query("k", c, clusters);
    FAIL("expected UnknownKeyError");
  } catch (const UnknownKeyError& err) {
    CHECK(err.suggestions() == std::vector<std::string>{"kepler", "konigsberger", "kronecker"});
  }
  CHECK_THROWS_AS(transverse_query("nobody", c, clusters), UnknownKeyError);
}

TEST_CASE("dossier counts agree with intensity and serialise deterministically") {
  const Corpus c = test::load_dir("hermite-1876");
  for (const auto& p : c.persons()) {
    const Dossier d = transverse_query(p.key, c, {});
    CHECK(d.citing.size() == citation_intensity(p.key, c));
    const auto doc = nlohmann::json::parse(dossier_json(d));
    CHECK(doc["citing_count"] == citation_intensity(p.key, c));
    CHECK(dossier_json(d) == dossier_json(transverse_query(p.key, c, {})));
  }
}

TEST_CASE("workplace distribution on the published counts") {
  // persons shaped after the published distribution of cited authors
  CorpusData d;
  const std::vector<std::pair<std::string, int>> regions{
      {"France", 47}, {"Germany", 40}, {"Italy", 9},  {"Russia", 9},  {"United Kingdom", 5}, {"Sweden", 3},
      {"Belgium", 2}, {"Finland", 2},  {"Denmark", 2}, {"Bohemia", 1}, {"Switzerland", 1}};
  Article a = article("all", 1880, {});
  int n = 0;
  for (const auto& [region, count] : regions) {
    for (int i = 0; i < count; ++i) {
      Person p = born("p" + std::to_string(++n), 1820);
      p.workplaces.push_back({region, std::nullopt, std::nullopt});
      if (region == "United Kingdom" && i == 0) {
        p.key = "sylvester";
        p.display_name = "sylvester";
        p.workplaces = {{"United Kingdom", 1838, 1876}, {"USA", 1876, 1883}, {"United Kingdom", 1883, 1897}};
      }
      a.mentions.push_back(named(p.key));
      d.persons.push_back(std::move(p));
    }
  }
  d.persons.push_back(born("nowhere", 1820));
  a.mentions.push_back(named("nowhere"));
  d.persons.push_back(born("editor", 1820));
  a.mentions.push_back(named("editor", "journal de"));
  d.articles = {a};

  const auto dist = workplace_distribution(Corpus::build(d));
  CHECK(dist.by_region.at("France") == 47);
  CHECK(dist.by_region.at("Germany") == 40);
  CHECK(dist.by_region.at("Italy") == 9);
  CHECK(dist.by_region.at("Russia") == 9);
  CHECK(dist.by_region.at("United Kingdom") == 5);
  CHECK(dist.by_region.at("USA") == 1);
  CHECK(dist.by_region.at("Bohemia") == 1);
  CHECK(dist.by_region.at(kUnknownRegion) == 1);
  CHECK(dist.by_primary_region.at("United Kingdom") == 5);
  CHECK_FALSE(dist.by_primary_region.count("USA"));
  CHECK(dist.multi_region == std::vector<std::string>{"sylvester"});
  CHECK(dist.persons == 122);
  CHECK(dist.region_assignments == 123);
  const std::string text = render_distribution(dist);
  CHECK(text.find("France,47,47\n") != std::string::npos);
  CHECK(text.back() == '\n');

  CHECK(workplace_distribution(Corpus::build({})).by_region.empty());
}

TEST_CASE("name set differences") {
  CorpusData a;
  a.persons = {born("hermite", 1822), born("jacobi", 1804), born("baillaud", 1848)};
  a.articles = {article("x", 1880, {named("Hermite"), named("Jacobi")})};
  CorpusData b = a;
  b.articles.push_back(article("letter", 1885, {named("M. Baillaud")}));
  const Corpus ca = Corpus::build(a), cb = Corpus::build(b);

  auto diff = name_set_diff(ca, cb);
  CHECK(diff.only_a.empty());
  CHECK(diff.only_b == std::vector<std::string>{"baillaud"});
  CHECK(diff.both == std::vector<std::string>{"hermite", "jacobi"});

  diff = name_set_diff(ca, ca);
  CHECK(diff.only_a.empty());
  CHECK(diff.only_b.empty());
  CHECK(diff.both.size() == 2);

  CorpusData other;
  other.persons = {born("picard", 1856)};
  other.articles = {article("y", 1890, {named("Picard")})};
  diff = name_set_diff(ca, Corpus::build(other));
  CHECK(diff.both.empty());
  CHECK(diff.only_a.size() == 2);
  CHECK(diff.only_b.size() == 1);
  CHECK(nlohmann::json::parse(name_set_diff_json(diff))["only_b"][0] == "picard");

  CorpusData clash_a = a, clash_b = a;
  clash_a.aliases = {{"h", "hermite", std::nullopt}};
  clash_b.aliases = {{"h", "jacobi", std::nullopt}};
  CHECK_THROWS_WITH_AS(name_set_diff(Corpus::build(clash_a), Corpus::build(clash_b)), doctest::Contains("'h'"),
                       AmbiguousAliasError);
}
