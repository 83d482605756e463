#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prosopo/prosopo.hpp"
#include "run_config.hpp"

namespace prosopo::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr const char* kSnapshotName = "corpus.proso";

struct Globals {
  std::optional<fs::path> config;
  std::optional<fs::path> snapshot;
  std::optional<fs::path> out_dir;
  std::optional<std::string> format;
  std::optional<double> threshold;
  std::optional<std::string> predicate;
  bool lenient = false;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : g_(g), out_(out) {
    std::optional<fs::path> config = g.config;
    if (!config) {
      if (const char* env = std::getenv("PROSO_CONFIG"); env && *env) config = fs::path(env);
    }
    rc_ = load_run_config(config);
    if (g.threshold) rc_.core_threshold = *g.threshold;
    if (g.predicate) {
      auto p = parse_link_predicate(*g.predicate);
      if (!p) throw InvalidArgument("unknown link predicate '" + *g.predicate + "'");
      rc_.graph.predicate = *p;
    }
    rc_.check();
  }

  const RunConfig& config() const { return rc_; }

  fs::path snapshot_path() const {
    if (g_.snapshot) return *g_.snapshot;
    return g_.out_dir.value_or(fs::path(".")) / kSnapshotName;
  }

  const Corpus& corpus() {
    if (!corpus_) {
      const fs::path path = snapshot_path();
      if (!fs::exists(path)) throw Error("snapshot not found: " + path.string());
      corpus_ = load_snapshot(path);
    }
    return *corpus_;
  }

  const CitationGraph& graph() {
    if (!graph_) graph_ = build_citation_graph(corpus(), rc_.graph);
    return *graph_;
  }

  std::string format_or(std::string fallback, std::initializer_list<std::string_view> allowed) const {
    const std::string f = g_.format.value_or(std::move(fallback));
    for (auto a : allowed) {
      if (f == a) return f;
    }
    throw InvalidArgument("unsupported --format '" + f + "' for this command");
  }

  /// Prints the result and mirrors it into the output directory when one is set.
  void emit(const std::string& name, const std::string& content) {
    out_ << content;
    if (g_.out_dir) write_file(*g_.out_dir / name, content);
  }

  static void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + path.string());
    f << content;
    if (!f) throw Error("cannot write " + path.string());
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  RunConfig rc_;
  std::optional<Corpus> corpus_;
  std::optional<CitationGraph> graph_;
};

std::string safe_file_part(std::string_view key) {
  std::string s;
  for (char c : key) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return s;
}

std::string cluster_text(const std::vector<Cluster>& clusters) {
  std::ostringstream os;
  for (const auto& c : clusters) {
    os << "cluster " << c.id << ": " << c.members.size() << " articles, " << c.first_year << "-"
       << c.last_year << "\n  members:";
    for (const auto& m : c.members) os << ' ' << m;
    os << "\n  core:";
    if (c.core.empty()) os << " -";
    for (const auto& e : c.core) os << ' ' << e.work << " (" << e.support << ")";
    os << '\n';
  }
  return os.str();
}

ojson cluster_json(const Cluster& c) {
  ojson core = ojson::array();
  for (const auto& e : c.core) core.push_back({{"work", e.work}, {"support", e.support.str()}});
  return {{"id", c.id},
          {"members", c.members},
          {"first_year", c.first_year},
          {"last_year", c.last_year},
          {"core", std::move(core)}};
}

ojson profile_json(const AuthorProfile& p) {
  ojson consistency = ojson::object();
  for (const auto& [id, f] : p.consistency) consistency[std::to_string(id)] = f.str();
  ojson cross = ojson::array();
  for (const auto& x : p.cross_self_citations) {
    cross.push_back({{"citing_article", x.citing_article},
                     {"citing_cluster", x.citing_cluster},
                     {"cited_article", x.cited_article},
                     {"cited_cluster", x.cited_cluster}});
  }
  return {{"author", p.author},
          {"memberships", p.memberships},
          {"consistency", std::move(consistency)},
          {"cross_self_citations", std::move(cross)}};
}

int cmd_ingest(Session& s, const std::optional<fs::path>& input_dir, const InputPaths& files) {
  InputPaths paths;
  if (input_dir) {
    paths = InputPaths::in_directory(*input_dir);
  } else if (!files.articles.empty()) {
    paths = files;
  } else {
    throw InvalidArgument("ingest needs --input DIR or --articles FILE");
  }
  IngestOptions options{s.config().resolver, s.globals().lenient};
  const Corpus corpus = ingest_corpus(paths, options);
  const fs::path snap = s.snapshot_path();
  if (snap.has_parent_path()) fs::create_directories(snap.parent_path());
  save_snapshot(corpus, snap);
  const ValidationReport report = validate_corpus(corpus);
  s.emit("validation.txt", report.render());
  return report.clean() ? kExitOk : kExitFindings;
}

int cmd_validate(Session& s) {
  const ValidationReport report = validate_corpus(s.corpus());
  s.emit("validation.txt", report.render());
  return report.clean() ? kExitOk : kExitFindings;
}

int cmd_clusters(Session& s, bool subnetworks, const std::optional<std::string>& author) {
  const auto& g = s.graph();
  const auto clusters = subnetworks ? detect_subnetworks(g, s.config().core_threshold)
                                    : compute_clusters(g, s.config().core_threshold);
  const std::string format = s.format_or("text", {"text", "json"});
  std::optional<AuthorProfile> profile;
  if (author) profile = author_cluster_profile(*author, clusters, g, s.corpus());
  if (format == "json") {
    ojson doc = ojson::object();
    doc["predicate"] = std::string(to_string(g.predicate));
    doc["clusters"] = ojson::array();
    for (const auto& c : clusters) doc["clusters"].push_back(cluster_json(c));
    if (profile) doc["author_profile"] = profile_json(*profile);
    s.emit("clusters.json", doc.dump(2) + "\n");
  } else {
    std::string text = cluster_text(clusters);
    if (profile) text += "author " + profile->author + ": " + profile_json(*profile).dump() + "\n";
    s.emit("clusters.txt", text);
  }
  return kExitOk;
}

int cmd_core(Session& s, int id, bool subnetworks) {
  const auto& g = s.graph();
  const auto clusters = subnetworks ? detect_subnetworks(g, s.config().core_threshold)
                                    : compute_clusters(g, s.config().core_threshold);
  auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) { return c.id == id; });
  if (it == clusters.end()) throw InvalidArgument("unknown cluster " + std::to_string(id));
  std::ostringstream os;
  for (const auto& e : cluster_core(*it, g, s.config().core_threshold)) {
    os << e.work << '\t' << e.support << '\n';
  }
  s.emit("core-" + std::to_string(id) + ".txt", os.str());
  return kExitOk;
}

int cmd_crosstab(Session& s, const std::optional<fs::path>& counts, bool include_eponyms) {
  CrossTab tab;
  if (counts) {
    std::ifstream in(*counts, std::ios::binary);
    if (!in) throw Error("cannot read " + counts->string());
    std::stringstream text;
    text << in.rdbuf();
    tab = parse_crosstab_json(text.str());
  } else {
    tab = generation_crosstab(s.corpus(), s.config().periods, s.config().cohorts,
                              CitedFilter{include_eponyms});
  }
  const std::string format = s.format_or("text", {"text", "csv", "json"});
  if (format == "csv") {
    s.emit("crosstab.csv", render_crosstab_csv(tab));
  } else if (format == "json") {
    s.emit("crosstab.json", crosstab_json(tab));
  } else {
    s.emit("crosstab.txt", render_crosstab(tab));
  }
  return kExitOk;
}

int cmd_query(Session& s, const std::string& person) {
  const auto clusters = compute_clusters(s.graph(), s.config().core_threshold);
  const Dossier d = transverse_query(person, s.corpus(), clusters, s.config().periods);
  s.emit("dossier-" + safe_file_part(d.person) + ".json", dossier_json(d));
  return kExitOk;
}

int cmd_intensity(Session& s, const std::string& person) {
  const std::size_t n = citation_intensity(person, s.corpus());
  const std::string key = transverse_query(person, s.corpus(), {}).person;
  s.emit("intensity-" + safe_file_part(key) + ".txt", key + "\t" + std::to_string(n) + "\n");
  return kExitOk;
}

int cmd_diff(Session& s, const fs::path& other) {
  if (!fs::exists(other)) throw Error("snapshot not found: " + other.string());
  const Corpus b = load_snapshot(other);
  s.emit("diff.json", name_set_diff_json(name_set_diff(s.corpus(), b)));
  return kExitOk;
}

int cmd_export(Session& s, const std::string& which) {
  const std::string f = s.format_or("dot", {"dot", "edge-csv"});
  const ExportFormat format = parse_export_format(f);
  const std::string ext = format == ExportFormat::dot ? ".dot" : ".edges.csv";
  if (which == "persons") {
    const PersonGraph pg = build_person_graph(s.corpus(), s.graph());
    s.emit("persons" + ext, export_graph(pg, format));
  } else {
    s.emit("citations" + ext, export_graph(s.graph(), format));
  }
  return kExitOk;
}

int cmd_fixtures(const Globals& g, std::uint64_t seed, const FixtureOptions& options) {
  const fs::path dir = g.out_dir.value_or(fs::path("."));
  fs::create_directories(dir);
  write_corpus_files(generate_fixture(seed, options), dir);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prosopographical corpus analysis", "prosopograph"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config, "JSON run configuration (falls back to $PROSO_CONFIG)");
  app.add_option("--snapshot", g.snapshot, "Snapshot file (default <out>/corpus.proso)");
  app.add_option("--out", g.out_dir, "Output directory; results are also written there");
  app.add_option("--format", g.format, "text|csv|json, or dot|edge-csv for export");
  app.add_option("--threshold", g.threshold, "Reference-core threshold in (0, 1]");
  app.add_option("--predicate", g.predicate, "citation|keyword|both");
  app.add_flag("--lenient", g.lenient, "Ignore unknown record fields");

  std::optional<fs::path> input_dir;
  InputPaths files;
  auto* ingest = app.add_subcommand("ingest", "Read JSONL records, write snapshot and validation report");
  ingest->add_option("--input", input_dir, "Directory holding articles.jsonl and friends");
  ingest->add_option("--articles", files.articles);
  ingest->add_option("--persons", files.persons);
  ingest->add_option("--aliases", files.aliases);
  ingest->add_option("--tenures", files.tenures);
  ingest->add_option("--links", files.links);

  auto* validate = app.add_subcommand("validate", "Re-run validation on a snapshot");

  bool subnetworks = false;
  std::optional<std::string> author;
  auto* clusters = app.add_subcommand("clusters", "List article clusters");
  clusters->add_flag("--subnetworks", subnetworks, "Split with label propagation");
  clusters->add_option("--author", author, "Also profile one author across clusters");

  int cluster_id = 0;
  auto* core = app.add_subcommand("core", "Reference core of one cluster");
  core->add_option("id", cluster_id)->required();
  core->add_flag("--subnetworks", subnetworks);

  std::optional<fs::path> counts;
  bool include_eponyms = false;
  auto* crosstab = app.add_subcommand("crosstab", "Period by birth-cohort table of cited authors");
  crosstab->add_option("--counts", counts, "Pre-aggregated table as JSON");
  crosstab->add_flag("--include-eponyms", include_eponyms);

  std::string person;
  auto* query = app.add_subcommand("query", "Everything recorded about one person");
  query->add_option("person", person)->required();

  auto* intensity = app.add_subcommand("intensity", "Number of articles citing a person");
  intensity->add_option("person", person)->required();

  fs::path other;
  auto* diff = app.add_subcommand("diff", "Compare person sets with another snapshot");
  diff->add_option("other", other)->required();

  std::string which = "citations";
  auto* exp = app.add_subcommand("export", "Export the citation or person graph");
  exp->add_option("--graph", which)->check(CLI::IsMember({"citations", "persons"}));

  std::uint64_t seed = 0;
  FixtureOptions fixture_options;
  auto* fixtures = app.add_subcommand("fixtures", "Randomized test corpora");
  fixtures->require_subcommand(1);
  auto* generate = fixtures->add_subcommand("generate", "Write a random corpus into --out");
  generate->add_option("--seed", seed)->required();
  generate->add_option("--max-articles", fixture_options.max_articles);
  generate->add_option("--persons", fixture_options.persons);

  std::vector<const char*> argv{"prosopograph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitError;
  }

  try {
    if (*fixtures) return cmd_fixtures(g, seed, fixture_options);
    Session s(g, out);
    if (*ingest) return cmd_ingest(s, input_dir, files);
    if (*validate) return cmd_validate(s);
    if (*clusters) return cmd_clusters(s, subnetworks, author);
    if (*core) return cmd_core(s, cluster_id, subnetworks);
    if (*crosstab) return cmd_crosstab(s, counts, include_eponyms);
    if (*query) return cmd_query(s, person);
    if (*intensity) return cmd_intensity(s, person);
    if (*diff) return cmd_diff(s, other);
    if (*exp) return cmd_export(s, which);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace prosopo::cli
