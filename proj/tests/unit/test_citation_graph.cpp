#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"

using namespace prosopo;

namespace {

RawReference cite(std::string author, std::optional<std::string> venue, std::optional<int> year = std::nullopt) {
  return {std::move(author), std::move(venue), year, std::nullopt, std::nullopt};
}

Article paper(std::string id, std::string author, std::string venue, int year,
              std::vector<RawReference> refs = {}) {
  Article a;
  a.id = std::move(id);
  a.venue = std::move(venue);
  a.year = year;
  a.references = std::move(refs);
  a.mentions.push_back({std::move(author), std::nullopt, std::vector<MentionRole>{MentionRole::author}});
  return a;
}

/// Articles a1..an by distinct authors in one venue; `links` are (citing, cited) 1-based pairs.
CorpusData chain_corpus(int n, const std::vector<std::pair<int, int>>& links) {
  CorpusData d;
  auto id = [](int i) { return std::string("a") + (i < 10 ? "0" : "") + std::to_string(i); };
  for (int i = 1; i <= n; ++i) d.articles.push_back(paper(id(i), "Author " + std::to_string(i), "J", 1870 + i));
  for (auto [from, to] : links) {
    d.articles[from - 1].references.push_back(cite("Author " + std::to_string(to), "J", 1870 + to));
  }
  return d;
}

std::vector<std::vector<std::string>> members(const std::vector<Cluster>& cs) { return oracle::members_of(cs); }

}  // namespace

TEST_CASE("references resolve to internal articles or external works") {
  CorpusData d;
  d.articles = {paper("cras-91", "M. Poincaré", "CRAS", 1880),
                paper("b", "M. Hermite", "CRAS", 1881,
                      {cite("Poincaré", "CRAS", 1880), cite("Gauss", "Disquisitiones")})};
  const Corpus c = Corpus::build(d);
  const CitationGraph g = build_citation_graph(c);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].source == "b");
  CHECK(g.edges[0].target == "cras-91");
  CHECK(g.edges[0].status == EdgeStatus::internal);
  CHECK(g.edges[1].status == EdgeStatus::external);
  CHECK(g.edges[1].target == "ext:gauss|disquisitiones|");
  REQUIRE(g.externals.size() == 1);
  CHECK(g.externals[0].author == "gauss");
  CHECK(g.externals[0].venue == "disquisitiones");
  CHECK_FALSE(g.externals[0].year.has_value());
  CHECK(g.warnings.empty());
  CHECK(g.find_article("b")->reference_count == 2);
  CHECK(g.find_article("cras-91")->authors == std::vector<std::string>{"poincare"});
}

TEST_CASE("a corpus without references has nodes only") {
  const CitationGraph g = build_citation_graph(test::load_dir("hermite-1876"));
  CHECK(g.articles.size() == 4);
  CHECK(g.edges.empty());
  CHECK(g.externals.empty());
}

TEST_CASE("year is a wildcard when missing, and must agree when present") {
  CorpusData d;
  d.articles = {paper("x", "Jordan", "JEP", 1880), paper("y", "Poincaré", "JEP", 1881, {cite("Jordan", "JEP")}),
                paper("z", "Poincaré", "JEP", 1882, {cite("Jordan", "JEP", 1879)})};
  const auto g = build_citation_graph(Corpus::build(d));
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].status == EdgeStatus::internal);
  CHECK(g.edges[1].status == EdgeStatus::external);
}

TEST_CASE("ambiguous matches stay external with a warning") {
  CorpusData d;
  d.articles = {paper("x1", "Jordan", "JEP", 1880), paper("x2", "Jordan", "JEP", 1883),
                paper("y", "Poincaré", "JEP", 1884, {cite("M. Jordan", "JEP")})};
  const auto g = build_citation_graph(Corpus::build(d));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].status == EdgeStatus::external);
  REQUIRE(g.warnings.size() == 1);
  CHECK(g.warnings[0].find("ambiguous") != std::string::npos);
}

TEST_CASE("self-citations are dropped with a warning") {
  CorpusData d;
  d.articles = {paper("x", "Jordan", "JEP", 1880, {cite("Jordan", "JEP", 1880)})};
  const auto g = build_citation_graph(Corpus::build(d));
  CHECK(g.edges.empty());
  REQUIRE(g.warnings.size() == 1);
  CHECK(g.warnings[0].find("self-citation") != std::string::npos);
}

TEST_CASE("reference authors go through the alias table") {
  CorpusData d;
  d.persons = {{"konigsberger", "Leo Königsberger"}};
  d.aliases = {{"l konigsberger", "konigsberger", std::nullopt}};
  d.articles = {paper("k", "Königsberger", "JRAM", 1875), paper("h", "Hermite", "JRAM", 1876, {cite("L. Königsberger", "JRAM")})};
  const auto g = build_citation_graph(Corpus::build(d));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].target == "k");
}

TEST_CASE("clusters are connected components") {
  auto clusters = [](int n, std::vector<std::pair<int, int>> links) {
    return compute_clusters(build_citation_graph(Corpus::build(chain_corpus(n, links))));
  };
  auto cs = clusters(5, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(members(cs) == std::vector<std::vector<std::string>>{{"a01", "a02", "a03"}, {"a04", "a05"}});
  CHECK(cs[0].id == 1);
  CHECK(cs[1].id == 2);
  CHECK(cs[0].first_year == 1871);
  CHECK(cs[0].last_year == 1873);

  CHECK(clusters(4, {}).size() == 4);

  std::vector<std::pair<int, int>> chain;
  for (int i = 1; i < 10; ++i) chain.emplace_back(i, i + 1);
  cs = clusters(10, chain);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].members.size() == 10);

  cs = clusters(5, {{5, 1}, {3, 2}});
  CHECK(members(cs) == std::vector<std::vector<std::string>>{{"a01", "a05"}, {"a02", "a03"}, {"a04"}});
  CHECK(cs[0].members == std::vector<std::string>{"a01", "a05"});
  CHECK(cs[2].id == 3);
}

TEST_CASE("keyword links as an alternative predicate") {
  CorpusData d = chain_corpus(4, {{1, 2}});
  d.articles[2].keywords = {"Formes", "réduction", "x"};
  d.articles[3].keywords = {"formes", "Réduction"};
  d.articles[1].keywords = {"formes"};
  const Corpus c = Corpus::build(d);
  CHECK(compute_clusters(build_citation_graph(c, {LinkPredicate::citation, 2})).size() == 3);
  const auto kw = build_citation_graph(c, {LinkPredicate::keyword, 2});
  CHECK(kw.keyword_links == std::vector<std::pair<std::string, std::string>>{{"a03", "a04"}});
  CHECK(members(compute_clusters(kw)) ==
        std::vector<std::vector<std::string>>{{"a01"}, {"a02"}, {"a03", "a04"}});
  CHECK(compute_clusters(build_citation_graph(c, {LinkPredicate::both, 2})).size() == 2);
  CHECK(compute_clusters(build_citation_graph(c, {LinkPredicate::both, 1})).size() == 1);
}

TEST_CASE("reference core") {
  // four members all cite W, one also cites V
  CorpusData d = chain_corpus(4, {{2, 1}, {3, 1}, {4, 1}});
  for (auto& a : d.articles) a.references.push_back(cite("Gauss", "W", 1801));
  d.articles[0].references.push_back(cite("Euler", "V", 1748));
  const auto g = build_citation_graph(Corpus::build(d));
  const auto cs = compute_clusters(g);
  REQUIRE(cs.size() == 1);
  const std::string w = "ext:gauss|w|1801", v = "ext:euler|v|1748";
  CHECK(cluster_core(cs[0], g, 0.3) == std::vector<CoreEntry>{{w, Fraction(1, 1)}});
  CHECK(cluster_core(cs[0], g, 0.25) == std::vector<CoreEntry>{{w, Fraction(1, 1)}, {v, Fraction(1, 4)}});
  CHECK(cluster_core(cs[0], g, 1.0) == std::vector<CoreEntry>{{w, Fraction(1, 1)}});
  CHECK(cs[0].core == cluster_core(cs[0], g, kDefaultCoreThreshold));
  CHECK_THROWS_AS(cluster_core(cs[0], g, 0.0), InvalidArgument);
  CHECK_THROWS_AS(cluster_core(cs[0], g, 1.5), InvalidArgument);
  CHECK_THROWS_AS(cluster_core(cs[0], g, -0.2), InvalidArgument);
}

TEST_CASE("hk-mini core holds both shared sources") {
  const Corpus c = test::load_dir("hk-mini");
  const auto g = build_citation_graph(c);
  const auto cs = compute_clusters(g);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].members.size() == 6);
  const auto core = cluster_core(cs[0], g, 0.3);
  REQUIRE(core.size() == 2);
  CHECK(core[0].work == "ext:gauss|disquisitiones arithmeticae|1801");
  CHECK(core[1].work == "ext:hermite|lettres a jacobi|1850");
  CHECK(core[0].support == Fraction(6, 6));
  CHECK(cluster_core(cs[0], g, 0.1).size() == 3);
}

TEST_CASE("cross-citation rate") {
  // cluster A: a01..a03, ten references in total; cluster B: a04..a05
  CorpusData d = chain_corpus(5, {{2, 1}, {3, 2}, {5, 4}});
  for (int k = 0; k < 8; ++k) d.articles[k % 3].references.push_back(cite("Gauss", "W" + std::to_string(k), 1801));
  const auto g0 = build_citation_graph(Corpus::build(d));
  const auto c0 = compute_clusters(g0);
  REQUIRE(c0.size() == 2);
  CHECK(cross_citation_rate(c0[0], c0[1], g0) == Fraction(0, 1));
  CHECK(cross_citation_rate(c0[1], c0[0], g0) == Fraction(0, 1));
  CHECK_THROWS_AS(cross_citation_rate(c0[0], c0[0], g0), InvalidArgument);

  // one more reference from A into B: 1 of 11 then; swap a W for it to keep 10
  d.articles[0].references.pop_back();
  d.articles[0].references.push_back(cite("Author 4", "J", 1874));
  const auto g1 = build_citation_graph(Corpus::build(d));
  Cluster a{1, {"a01", "a02", "a03"}, {}, 0, 0};
  Cluster b{2, {"a04", "a05"}, {}, 0, 0};
  std::size_t refs = 0;
  for (const auto& id : a.members) refs += g1.find_article(id)->reference_count;
  REQUIRE(refs == 10);
  CHECK(cross_citation_rate(a, b, g1) == Fraction(1, 10));
  CHECK(cross_citation_rate(a, b, g1).to_double() == doctest::Approx(0.1));
  CHECK(cross_citation_rate(b, a, g1) == Fraction(0, 1));
}

TEST_CASE("author profile across clusters") {
  // Maillet-like author: two articles in each of two disjoint networks
  CorpusData d;
  d.articles = {paper("a1", "Lucas", "NA", 1890), paper("a2", "Maillet", "NA", 1895, {cite("Lucas", "NA")}),
                paper("a3", "Maillet", "NA", 1896, {cite("Lucas", "NA"), cite("Maillet", "NA", 1895)}),
                paper("b1", "Picard", "AEN", 1890), paper("b2", "Maillet", "AEN", 1897, {cite("Picard", "AEN")}),
                paper("b3", "Maillet", "AEN", 1898, {cite("Maillet", "AEN", 1897)})};
  const Corpus c = Corpus::build(d);
  const auto g = build_citation_graph(c);
  const auto cs = compute_clusters(g);
  REQUIRE(cs.size() == 2);
  const auto p = author_cluster_profile("maillet", cs, g, c);
  CHECK(p.author == "maillet");
  CHECK(p.memberships == std::vector<int>{1, 2});
  CHECK(p.consistency.at(1) == Fraction(1, 1));
  CHECK(p.consistency.at(2) == Fraction(1, 1));
  CHECK(p.cross_self_citations.empty());
  CHECK(author_cluster_profile("M. Maillet", cs, g, c).memberships == p.memberships);

  const auto single = author_cluster_profile("lucas", cs, g, c);
  CHECK(single.memberships == std::vector<int>{1});
  CHECK(single.consistency.at(1) == Fraction(1, 1));

  CHECK_THROWS_AS(author_cluster_profile("nobody", cs, g, c), UnknownKeyError);
}

TEST_CASE("author citing their own article in another cluster is flagged") {
  CorpusData d;
  d.articles = {paper("a1", "Maillet", "NA", 1895), paper("a2", "Lucas", "NA", 1896, {cite("Maillet", "NA")}),
                paper("b1", "Maillet", "AEN", 1897, {cite("Maillet", "NA", 1895), cite("Gauss", "D")}),
                paper("b2", "Picard", "AEN", 1898, {cite("Maillet", "AEN")})};
  const Corpus c = Corpus::build(d);
  const auto g = build_citation_graph(c);
  // a grouping that separates the two venues, as an editor or a sub-network split would
  const std::vector<Cluster> cs{{1, {"a1", "a2"}, {}, 1895, 1896}, {2, {"b1", "b2"}, {}, 1897, 1898}};
  const auto p = author_cluster_profile("maillet", cs, g, c);
  CHECK(p.memberships == std::vector<int>{1, 2});
  REQUIRE(p.cross_self_citations.size() == 1);
  CHECK(p.cross_self_citations[0] == CrossSelfCitation{"b1", 2, "a1", 1});
  CHECK(p.consistency.at(2) == Fraction(0, 2));
}

TEST_CASE("attribute homogeneity") {
  CorpusData d = chain_corpus(3, {{2, 1}, {3, 1}});
  d.persons = {{"author 1", "A1"}, {"author 2", "A2"}, {"author 3", "A3"}};
  for (auto& p : d.persons) p.professions = {"professeur d'université"};
  auto run = [](const CorpusData& data, Attribute attr) {
    const Corpus c = Corpus::build(data);
    const auto g = build_citation_graph(c);
    return cluster_attribute_homogeneity(compute_clusters(g).at(0), attr, g, c);
  };
  auto h = run(d, Attribute::profession);
  CHECK(h.value == "professeur d'université");
  CHECK(h.share == Fraction(1, 1));

  d.persons[2].professions = {"ingénieur"};
  h = run(d, Attribute::profession);
  CHECK(h.value == "professeur d'université");
  CHECK(h.share == Fraction(2, 3));

  d.persons[0].memberships = {"Académie des sciences"};
  d.persons[1].memberships = {"Société mathématique de France"};
  h = run(d, Attribute::membership);
  CHECK(h.value == "Académie des sciences");
  CHECK(h.share == Fraction(1, 2));

  CHECK_THROWS_AS(run(d, Attribute::workplace_country), NoDataError);
  CHECK(parse_attribute("cited-venue-country") == Attribute::cited_venue_country);
  CHECK_FALSE(parse_attribute("colour").has_value());
}

TEST_CASE("cited venue country homogeneity") {
  CorpusData d;
  d.articles = {paper("a", "X", "J", 1890, {cite("Y", "American Journal of Mathematics"), cite("Z", "CRAS"),
                                            cite("W", "American Journal of Mathematics"), cite("V", "Unknown")})};
  const Corpus c = Corpus::build(d);
  const auto g = build_citation_graph(c);
  const std::map<std::string, std::string> countries{{"american journal of mathematics", "USA"}, {"cras", "France"}};
  const auto h = cluster_attribute_homogeneity(compute_clusters(g).at(0), Attribute::cited_venue_country, g, c, countries);
  CHECK(h.value == "USA");
  CHECK(h.share == Fraction(2, 3));
  CHECK_THROWS_AS(cluster_attribute_homogeneity(compute_clusters(g).at(0), Attribute::cited_venue_country, g, c),
                  NoDataError);
}

TEST_CASE("person graph keeps cites and personal links apart") {
  CorpusData d;
  d.persons = {{"hermite", "Hermite"}, {"sylvester", "Sylvester"}, {"jordan", "Jordan"}, {"cayley", "Cayley"}};
  d.articles = {paper("h", "Hermite", "CRAS", 1870), paper("s", "Sylvester", "AJM", 1880, {cite("Cayley", "QJ")}),
                paper("j", "Jordan", "JMPA", 1881, {cite("Hermite", "CRAS", 1870)})};
  d.links = {{"hermite", "sylvester", LinkKind::correspondence, YearRange{1860, 1890}},
             {"hermite", "jordan", LinkKind::correspondence, std::nullopt}};
  const Corpus c = Corpus::build(d);
  const auto pg = build_person_graph(c, build_citation_graph(c));
  CHECK(std::count_if(pg.edges.begin(), pg.edges.end(), [](const PersonEdge& e) { return e.kind == "cites"; }) == 2);
  const auto overlap = network_overlap(pg);
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  CHECK(overlap.link_only == Pairs{{"hermite", "sylvester"}});
  CHECK(overlap.both == Pairs{{"hermite", "jordan"}});
  CHECK(overlap.cites_only == Pairs{{"cayley", "sylvester"}});

  d.links.clear();
  const Corpus bare = Corpus::build(d);
  const auto only_cites = build_person_graph(bare, build_citation_graph(bare));
  CHECK(std::all_of(only_cites.edges.begin(), only_cites.edges.end(),
                    [](const PersonEdge& e) { return e.kind == "cites"; }));
}

TEST_CASE("sub-networks split loosely joined groups") {
  // two triangles joined by one edge
  const CorpusData d = chain_corpus(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {4, 3}});
  const auto g = build_citation_graph(Corpus::build(d));
  CHECK(compute_clusters(g).size() == 1);
  const auto subs = detect_subnetworks(g);
  CHECK(members(subs) == std::vector<std::vector<std::string>>{{"a01", "a02", "a03"}, {"a04", "a05", "a06"}});
  CHECK(members(detect_subnetworks(g)) == members(subs));

  // a lone mutual pair does not oscillate apart
  const auto pair = build_citation_graph(Corpus::build(chain_corpus(2, {{1, 2}, {2, 1}})));
  CHECK(detect_subnetworks(pair).size() == 1);
  const auto path = build_citation_graph(Corpus::build(chain_corpus(3, {{1, 2}, {2, 3}})));
  CHECK(detect_subnetworks(path).size() == 1);
}
