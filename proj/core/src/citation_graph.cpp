#include "prosopo/citation_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"
#include "prosopo/name_resolver.hpp"

namespace prosopo {
namespace {

std::string identity_of(const NormalizedName& name, const Corpus& corpus) {
  return resolve_person(name, corpus).value_or(name.key);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index becomes the root, so roots are the smallest member ids.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t index_of(const CitationGraph& graph, std::string_view id) {
  auto it = std::lower_bound(graph.articles.begin(), graph.articles.end(), id,
                             [](const ArticleNode& n, std::string_view k) { return n.id < k; });
  return static_cast<std::size_t>(it - graph.articles.begin());
}

bool uses_citations(LinkPredicate p) { return p != LinkPredicate::keyword; }
bool uses_keywords(LinkPredicate p) { return p != LinkPredicate::citation; }

/// Undirected neighbour lists over article indices, following the graph's predicate.
std::vector<std::vector<std::size_t>> adjacency(const CitationGraph& graph) {
  std::vector<std::set<std::size_t>> sets(graph.articles.size());
  auto link = [&](std::string_view a, std::string_view b) {
    const std::size_t i = index_of(graph, a);
    const std::size_t j = index_of(graph, b);
    if (i == j) return;
    sets[i].insert(j);
    sets[j].insert(i);
  };
  if (uses_citations(graph.predicate)) {
    for (const auto& e : graph.edges) {
      if (e.status == EdgeStatus::internal) link(e.source, e.target);
    }
  }
  if (uses_keywords(graph.predicate)) {
    for (const auto& [a, b] : graph.keyword_links) link(a, b);
  }
  std::vector<std::vector<std::size_t>> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out[i].assign(sets[i].begin(), sets[i].end());
  return out;
}

/// Turns groups of article indices into clusters numbered by smallest member.
std::vector<Cluster> make_clusters(std::vector<std::vector<std::size_t>> groups, const CitationGraph& graph,
                                   double core_threshold) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  std::vector<Cluster> clusters;
  clusters.reserve(groups.size());
  int next_id = 1;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Cluster c;
    c.id = next_id++;
    c.first_year = graph.articles[g.front()].year;
    c.last_year = c.first_year;
    for (std::size_t i : g) {
      c.members.push_back(graph.articles[i].id);
      c.first_year = std::min(c.first_year, graph.articles[i].year);
      c.last_year = std::max(c.last_year, graph.articles[i].year);
    }
    c.core = cluster_core(c, graph, core_threshold);
    clusters.push_back(std::move(c));
  }
  return clusters;
}

bool contains(const std::vector<std::string>& sorted, std::string_view value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace

std::string_view to_string(EdgeStatus status) noexcept {
  return status == EdgeStatus::internal ? "internal" : "external";
}

std::string_view to_string(LinkPredicate predicate) noexcept {
  switch (predicate) {
    case LinkPredicate::citation: return "citation";
    case LinkPredicate::keyword: return "keyword";
    case LinkPredicate::both: return "both";
  }
  return "citation";
}

std::optional<LinkPredicate> parse_link_predicate(std::string_view text) noexcept {
  if (text == "citation") return LinkPredicate::citation;
  if (text == "keyword") return LinkPredicate::keyword;
  if (text == "both") return LinkPredicate::both;
  return std::nullopt;
}

std::optional<Attribute> parse_attribute(std::string_view text) noexcept {
  if (text == "profession") return Attribute::profession;
  if (text == "membership") return Attribute::membership;
  if (text == "workplace-country") return Attribute::workplace_country;
  if (text == "cited-venue-country") return Attribute::cited_venue_country;
  return std::nullopt;
}

const ArticleNode* CitationGraph::find_article(std::string_view id) const {
  const std::size_t i = index_of(*this, id);
  if (i == articles.size() || articles[i].id != id) return nullptr;
  return &articles[i];
}

std::string venue_key(std::string_view venue) { return fold_text(venue); }

std::string external_work_id(std::string_view author, const std::optional<std::string>& venue,
                             const std::optional<int>& year) {
  std::string id = "ext:";
  id += author;
  id += '|';
  if (venue) id += *venue;
  id += '|';
  if (year) id += std::to_string(*year);
  return id;
}

CitationGraph build_citation_graph(const Corpus& corpus, const GraphOptions& options) {
  CitationGraph graph;
  graph.predicate = options.predicate;
  const auto& cfg = corpus.config();

  // (author identity, venue key) -> indices of candidate articles
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_author_venue;
  for (const auto& article : corpus.articles()) {
    ArticleNode node{article.id, article.year, article.references.size(), {}};
    for (const auto& m : corpus.mentions_of(article.id)) {
      if (m.roles.count(MentionRole::author)) node.authors.push_back(m.person.value_or(m.key));
    }
    std::sort(node.authors.begin(), node.authors.end());
    node.authors.erase(std::unique(node.authors.begin(), node.authors.end()), node.authors.end());
    const std::string venue = venue_key(article.venue);
    for (const auto& author : node.authors) by_author_venue[{author, venue}].push_back(graph.articles.size());
    graph.articles.push_back(std::move(node));
  }

  std::map<std::string, ExternalWork> externals;
  for (const auto& article : corpus.articles()) {
    for (std::size_t r = 0; r < article.references.size(); ++r) {
      const RawReference& ref = article.references[r];
      const std::string author = identity_of(normalize_surface(ref.author_surface, cfg), corpus);
      std::optional<std::string> venue;
      if (ref.venue_surface) venue = venue_key(*ref.venue_surface);

      std::vector<std::size_t> candidates;
      if (venue) {
        if (auto it = by_author_venue.find({author, *venue}); it != by_author_venue.end()) {
          for (std::size_t i : it->second) {
            if (!ref.year || *ref.year == graph.articles[i].year) candidates.push_back(i);
          }
        }
      }

      const std::string where = article.id + " reference " + std::to_string(r);
      if (candidates.size() == 1) {
        const ArticleNode& target = graph.articles[candidates.front()];
        if (target.id == article.id) {
          graph.warnings.push_back(where + ": self-citation dropped");
          continue;
        }
        graph.edges.push_back({article.id, target.id, EdgeStatus::internal, r});
        continue;
      }
      if (candidates.size() > 1) {
        std::string ids;
        for (std::size_t i : candidates) ids += (ids.empty() ? "" : ", ") + graph.articles[i].id;
        graph.warnings.push_back(where + ": ambiguous match (" + ids + "), kept as external");
      }
      const std::string id = external_work_id(author, venue, ref.year);
      externals.try_emplace(id, ExternalWork{id, author, venue, ref.year});
      graph.edges.push_back({article.id, id, EdgeStatus::external, r});
    }
  }
  for (auto& [id, work] : externals) graph.externals.push_back(std::move(work));

  if (uses_keywords(options.predicate)) {
    std::vector<std::set<std::string>> keywords;
    for (const auto& article : corpus.articles()) {
      std::set<std::string> folded;
      for (const auto& k : article.keywords) folded.insert(fold_text(k));
      keywords.push_back(std::move(folded));
    }
    for (std::size_t i = 0; i < keywords.size(); ++i) {
      for (std::size_t j = i + 1; j < keywords.size(); ++j) {
        std::vector<std::string> shared;
        std::set_intersection(keywords[i].begin(), keywords[i].end(), keywords[j].begin(),
                              keywords[j].end(), std::back_inserter(shared));
        if (static_cast<int>(shared.size()) >= options.keyword_min_shared) {
          graph.keyword_links.emplace_back(graph.articles[i].id, graph.articles[j].id);
        }
      }
    }
  }
  return graph;
}

std::vector<Cluster> compute_clusters(const CitationGraph& graph, double core_threshold) {
  DisjointSets sets(graph.articles.size());
  const auto adj = adjacency(graph);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j : adj[i]) sets.unite(i, j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < graph.articles.size(); ++i) groups[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return make_clusters(std::move(out), graph, core_threshold);
}

std::vector<CoreEntry> cluster_core(const Cluster& cluster, const CitationGraph& graph, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("core threshold must lie in (0, 1], got " + std::to_string(threshold));
  }
  const Fraction cut = Fraction::from_decimal(threshold);
  std::map<std::string, std::set<std::string>> citing;  // work -> citing members
  for (const auto& e : graph.edges) {
    if (e.status == EdgeStatus::external && contains(cluster.members, e.source)) {
      citing[e.target].insert(e.source);
    }
  }
  std::vector<CoreEntry> core;
  const auto size = static_cast<std::int64_t>(cluster.members.size());
  for (const auto& [work, sources] : citing) {
    Fraction support(static_cast<std::int64_t>(sources.size()), size);
    if (support >= cut) core.push_back({work, support});
  }
  std::sort(core.begin(), core.end(), [](const CoreEntry& a, const CoreEntry& b) {
    if (a.support != b.support) return a.support > b.support;
    return a.work < b.work;
  });
  return core;
}

Fraction cross_citation_rate(const Cluster& from, const Cluster& to, const CitationGraph& graph) {
  if (from.id == to.id || from.members == to.members) {
    throw InvalidArgument("cross-citation rate needs two different clusters");
  }
  std::int64_t total = 0;
  for (const auto& id : from.members) {
    if (const ArticleNode* node = graph.find_article(id)) total += static_cast<std::int64_t>(node->reference_count);
  }
  std::int64_t into = 0;
  for (const auto& e : graph.edges) {
    if (e.status == EdgeStatus::internal && contains(from.members, e.source) && contains(to.members, e.target)) {
      ++into;
    }
  }
  return Fraction(into, total);
}

std::vector<Cluster> detect_subnetworks(const CitationGraph& graph, double core_threshold, int max_rounds) {
  const auto adj = adjacency(graph);
  std::vector<std::size_t> label(graph.articles.size());
  std::iota(label.begin(), label.end(), 0);
  // Synchronous rounds; a node's own label votes too, which stops two-node oscillation.
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<std::size_t> next = label;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i].empty()) continue;
      std::map<std::size_t, std::size_t> votes{{label[i], 1}};
      for (std::size_t j : adj[i]) ++votes[label[j]];
      std::size_t best_votes = 0;
      for (const auto& [l, n] : votes) {  // ascending labels: first maximum wins ties
        if (n > best_votes) {
          next[i] = l;
          best_votes = n;
        }
      }
    }
    if (next == label) break;
    label = std::move(next);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < label.size(); ++i) groups[label[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [l, members] : groups) out.push_back(std::move(members));
  return make_clusters(std::move(out), graph, core_threshold);
}

AuthorProfile author_cluster_profile(std::string_view author, const std::vector<Cluster>& clusters,
                                     const CitationGraph& graph, const Corpus& corpus) {
  const std::string name_key = normalize_surface(author, corpus.config()).key;
  auto found = corpus.lookup_person(author);
  if (!found) found = corpus.lookup_person(name_key);
  const std::string key = found.value_or(name_key);
  std::vector<std::string> own;  // sorted, since graph.articles is
  for (const auto& node : graph.articles) {
    if (std::binary_search(node.authors.begin(), node.authors.end(), key)) own.push_back(node.id);
  }
  if (own.empty()) throw UnknownKeyError(std::string(author), corpus.keys_with_prefix(author));

  std::map<std::string, int> cluster_of;
  for (const auto& c : clusters) {
    for (const auto& m : c.members) cluster_of[m] = c.id;
  }
  auto cluster_id = [&](const std::string& article) {
    auto it = cluster_of.find(article);
    return it == cluster_of.end() ? 0 : it->second;
  };

  AuthorProfile profile;
  profile.author = key;
  std::set<int> memberships;
  for (const auto& a : own) memberships.insert(cluster_id(a));
  profile.memberships.assign(memberships.begin(), memberships.end());

  for (int id : profile.memberships) {
    const Cluster* cluster = nullptr;
    for (const auto& c : clusters) {
      if (c.id == id) cluster = &c;
    }
    std::int64_t refs = 0;
    std::int64_t landing = 0;
    for (const auto& e : graph.edges) {
      if (!contains(own, e.source) || cluster_id(e.source) != id) continue;
      ++refs;
      if (!cluster) continue;
      const bool in_members = e.status == EdgeStatus::internal && contains(cluster->members, e.target);
      const bool in_core = e.status == EdgeStatus::external &&
                           std::any_of(cluster->core.begin(), cluster->core.end(),
                                       [&](const CoreEntry& c) { return c.work == e.target; });
      if (in_members || in_core) ++landing;
    }
    profile.consistency[id] = refs == 0 ? Fraction(1, 1) : Fraction(landing, refs);
  }

  for (const auto& e : graph.edges) {
    if (e.status != EdgeStatus::internal || !contains(own, e.source) || !contains(own, e.target)) continue;
    const int from = cluster_id(e.source);
    const int to = cluster_id(e.target);
    if (from != to) profile.cross_self_citations.push_back({e.source, from, e.target, to});
  }
  return profile;
}

Homogeneity cluster_attribute_homogeneity(const Cluster& cluster, Attribute attribute,
                                          const CitationGraph& graph, const Corpus& corpus,
                                          const std::map<std::string, std::string>& venue_countries) {
  std::map<std::string, std::int64_t> counts;
  std::int64_t total = 0;

  if (attribute == Attribute::cited_venue_country) {
    for (const auto& id : cluster.members) {
      const Article* article = corpus.find_article(id);
      if (!article) continue;
      for (const auto& ref : article->references) {
        if (!ref.venue_surface) continue;
        auto it = venue_countries.find(venue_key(*ref.venue_surface));
        if (it == venue_countries.end()) it = venue_countries.find(*ref.venue_surface);
        if (it == venue_countries.end()) continue;
        ++counts[it->second];
        ++total;
      }
    }
  } else {
    std::set<std::string> authors;
    for (const auto& id : cluster.members) {
      if (const ArticleNode* node = graph.find_article(id)) authors.insert(node->authors.begin(), node->authors.end());
    }
    for (const auto& key : authors) {
      const Person* person = corpus.find_person(key);
      if (!person) continue;
      std::set<std::string> values;
      switch (attribute) {
        case Attribute::profession: values.insert(person->professions.begin(), person->professions.end()); break;
        case Attribute::membership: values.insert(person->memberships.begin(), person->memberships.end()); break;
        case Attribute::workplace_country:
          for (const auto& w : person->workplaces) values.insert(w.region);
          break;
        case Attribute::cited_venue_country: break;
      }
      if (values.empty()) continue;
      ++total;
      for (const auto& v : values) ++counts[v];
    }
  }

  if (total == 0) throw NoDataError("no attribute data for cluster " + std::to_string(cluster.id));
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return {best->first, Fraction(best->second, total)};
}

PersonGraph build_person_graph(const Corpus& corpus, const CitationGraph& graph) {
  PersonGraph out;
  std::set<std::string> nodes;
  for (const auto& p : corpus.persons()) nodes.insert(p.key);

  auto persons_of_article = [&](std::string_view id) {
    std::vector<std::string> keys;
    if (const ArticleNode* node = graph.find_article(id)) {
      for (const auto& a : node->authors) {
        if (corpus.find_person(a)) keys.push_back(a);
      }
    }
    return keys;
  };
  std::map<std::string, const ExternalWork*> works;
  for (const auto& w : graph.externals) works[w.id] = &w;

  std::map<std::pair<std::string, std::string>, std::size_t> cites;
  for (const auto& e : graph.edges) {
    std::vector<std::string> cited;
    if (e.status == EdgeStatus::internal) {
      cited = persons_of_article(e.target);
    } else if (auto it = works.find(e.target); it != works.end() && corpus.find_person(it->second->author)) {
      cited.push_back(it->second->author);
    }
    for (const auto& x : persons_of_article(e.source)) {
      for (const auto& y : cited) {
        if (x != y) ++cites[{x, y}];
      }
    }
  }
  for (const auto& [pair, n] : cites) {
    out.edges.push_back({pair.first, pair.second, "cites", std::to_string(n)});
    nodes.insert(pair.first);
    nodes.insert(pair.second);
  }
  for (const auto& l : corpus.links()) {
    std::string label;
    if (l.period) label = std::to_string(l.period->from_year) + "-" + std::to_string(l.period->to_year);
    out.edges.push_back({l.a, l.b, std::string(to_string(l.link_kind)), label});
    nodes.insert(l.a);
    nodes.insert(l.b);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.nodes.assign(nodes.begin(), nodes.end());
  return out;
}

NetworkOverlap network_overlap(const PersonGraph& graph) {
  std::set<std::pair<std::string, std::string>> cited;
  std::set<std::pair<std::string, std::string>> linked;
  for (const auto& e : graph.edges) {
    auto pair = std::minmax(e.from, e.to);
    (e.kind == "cites" ? cited : linked).insert({pair.first, pair.second});
  }
  NetworkOverlap out;
  std::set_intersection(cited.begin(), cited.end(), linked.begin(), linked.end(), std::back_inserter(out.both));
  std::set_difference(cited.begin(), cited.end(), linked.begin(), linked.end(), std::back_inserter(out.cites_only));
  std::set_difference(linked.begin(), linked.end(), cited.begin(), cited.end(), std::back_inserter(out.link_only));
  return out;
}

}  // namespace prosopo
