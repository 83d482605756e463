#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prosopo/fraction.hpp"
#include "prosopo/types.hpp"

namespace prosopo {

class Corpus;

enum class EdgeStatus { internal, external };
enum class LinkPredicate { citation, keyword, both };

std::string_view to_string(EdgeStatus status) noexcept;
std::string_view to_string(LinkPredicate predicate) noexcept;
std::optional<LinkPredicate> parse_link_predicate(std::string_view text) noexcept;

struct GraphOptions {
  LinkPredicate predicate = LinkPredicate::citation;
  /// Articles sharing at least this many keywords are linked when the keyword predicate is on.
  int keyword_min_shared = 2;
};

struct ArticleNode {
  std::string id;
  int year = 0;
  std::size_t reference_count = 0;
  std::vector<std::string> authors;  // person keys, or name keys when unresolved
};

/// A cited work outside the corpus, identified by (author, venue?, year?).
struct ExternalWork {
  std::string id;
  std::string author;
  std::optional<std::string> venue;
  std::optional<int> year;
};

struct CitationEdge {
  std::string source;  // citing article
  std::string target;  // article id or external work id
  EdgeStatus status = EdgeStatus::external;
  std::size_t reference_index = 0;
};

struct CitationGraph {
  std::vector<ArticleNode> articles;    // sorted by id
  std::vector<ExternalWork> externals;  // sorted by id
  std::vector<CitationEdge> edges;      // sorted by (source, reference_index)
  std::vector<std::pair<std::string, std::string>> keyword_links;  // a < b, sorted
  LinkPredicate predicate = LinkPredicate::citation;
  std::vector<std::string> warnings;

  const ArticleNode* find_article(std::string_view id) const;
};

/// Folded venue key used on both sides of reference matching.
std::string venue_key(std::string_view venue);
std::string external_work_id(std::string_view author, const std::optional<std::string>& venue,
                             const std::optional<int>& year);

/// Resolves every reference to an internal article when exactly one article has
/// a matching author, venue and (where both are known) year; otherwise to an
/// external work. Ambiguities and dropped self-citations are kept as warnings.
CitationGraph build_citation_graph(const Corpus& corpus, const GraphOptions& options = {});

struct CoreEntry {
  std::string work;
  Fraction support;  // citing members / member count
  bool operator==(const CoreEntry&) const = default;
};

struct Cluster {
  int id = 0;
  std::vector<std::string> members;  // sorted
  std::vector<CoreEntry> core;
  int first_year = 0;
  int last_year = 0;
};

inline constexpr double kDefaultCoreThreshold = 0.3;

/// Connected components of the undirected link projection (citation edges,
/// keyword links, or both, per graph.predicate). Isolated articles are
/// singletons. Ids start at 1, ascending by smallest member id.
std::vector<Cluster> compute_clusters(const CitationGraph& graph,
                                      double core_threshold = kDefaultCoreThreshold);

/// External works cited by at least `threshold` of the cluster's members,
/// by descending support then work id. Throws InvalidArgument outside (0, 1].
std::vector<CoreEntry> cluster_core(const Cluster& cluster, const CitationGraph& graph,
                                    double threshold = kDefaultCoreThreshold);

/// Share of the references made by A's members that resolve to an article of B.
/// Directional. Throws InvalidArgument when A and B are the same cluster.
Fraction cross_citation_rate(const Cluster& from, const Cluster& to, const CitationGraph& graph);

/// Experimental sub-network split: synchronous label propagation over the
/// cluster links, each article voting for its own label as well, ties to the smallest label.
std::vector<Cluster> detect_subnetworks(const CitationGraph& graph,
                                        double core_threshold = kDefaultCoreThreshold,
                                        int max_rounds = 100);

struct CrossSelfCitation {
  std::string citing_article;
  int citing_cluster = 0;
  std::string cited_article;
  int cited_cluster = 0;
  bool operator==(const CrossSelfCitation&) const = default;
};

struct AuthorProfile {
  std::string author;
  std::vector<int> memberships;
  std::map<int, Fraction> consistency;
  std::vector<CrossSelfCitation> cross_self_citations;
};

/// Where an author publishes and whether each article behaves like its cluster:
/// per cluster, the share of the author's references there that land in the
/// cluster's members or core (vacuously 1 with no references).
AuthorProfile author_cluster_profile(std::string_view author, const std::vector<Cluster>& clusters,
                                     const CitationGraph& graph, const Corpus& corpus);

enum class Attribute { profession, membership, workplace_country, cited_venue_country };

std::optional<Attribute> parse_attribute(std::string_view text) noexcept;

struct Homogeneity {
  std::string value;
  Fraction share;
};

/// Modal attribute value over a cluster's resolved authors (share of authors
/// carrying it) or over its references' venues (share of located references).
/// Ties go to the lexicographically smallest value. Throws NoDataError.
Homogeneity cluster_attribute_homogeneity(
    const Cluster& cluster, Attribute attribute, const CitationGraph& graph, const Corpus& corpus,
    const std::map<std::string, std::string>& venue_countries = {});

struct PersonEdge {
  std::string from;
  std::string to;
  std::string kind;   // "cites" or a link kind
  std::string label;  // citation count for cites, "from-to" years for links
  auto operator<=>(const PersonEdge&) const = default;
};

/// Person network. Cites edges are directed and derived from the citation
/// graph; link edges come from the personal-link base.
struct PersonGraph {
  std::vector<std::string> nodes;  // sorted
  std::vector<PersonEdge> edges;   // sorted
};

PersonGraph build_person_graph(const Corpus& corpus, const CitationGraph& graph);

struct NetworkOverlap {
  std::vector<std::pair<std::string, std::string>> both;
  std::vector<std::pair<std::string, std::string>> cites_only;
  std::vector<std::pair<std::string, std::string>> link_only;
};

/// Compares unordered person pairs joined by citation against pairs joined by personal links.
NetworkOverlap network_overlap(const PersonGraph& graph);

enum class ExportFormat { dot, edge_csv };

/// Throws InvalidArgument for anything but "dot" and "edge-csv".
ExportFormat parse_export_format(std::string_view text);

struct EdgeRecord {
  std::string src;
  std::string dst;
  std::string kind;
  std::string label;
  auto operator<=>(const EdgeRecord&) const = default;
};

std::vector<EdgeRecord> edge_records(const CitationGraph& graph);
std::vector<EdgeRecord> edge_records(const PersonGraph& graph);

/// DOT: "digraph citations" or "graph persons", quoted ids, labelled edges.
/// edge-csv: header "src,dst,kind,label", one edge per line, every line
/// newline-terminated. Both sorted.
std::string export_graph(const CitationGraph& graph, ExportFormat format);
std::string export_graph(const PersonGraph& graph, ExportFormat format);
std::vector<EdgeRecord> import_edge_csv(std::string_view csv);

}  // namespace prosopo
