#include "run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace prosopo::cli {

using nlohmann::json;

void RunConfig::check() const {
  periods.check();
  cohorts.check();
  if (!(core_threshold > 0.0 && core_threshold <= 1.0)) {
    throw InvalidArgument("core threshold must lie in (0, 1]");
  }
  if (graph.keyword_min_shared < 1) throw InvalidArgument("keyword_min_shared must be at least 1");
}

RunConfig parse_run_config(std::string_view json_text) {
  RunConfig rc;
  rc.resolver = parse_resolver_config(json_text);
  json doc;
  try {
    doc = json::parse(json_text);
    if (auto it = doc.find("periods"); it != doc.end()) {
      PeriodScheme p;
      p.boundaries = it->at("boundaries").get<std::vector<int>>();
      p.labels = it->at("labels").get<std::vector<std::string>>();
      if (it->contains("all_label")) p.all_label = it->at("all_label").get<std::string>();
      rc.periods = std::move(p);
    }
    if (auto it = doc.find("cohorts"); it != doc.end()) {
      rc.cohorts.anchor = it->value("anchor", rc.cohorts.anchor);
      rc.cohorts.width = it->value("width", rc.cohorts.width);
      rc.cohorts.end = it->value("end", rc.cohorts.end);
    }
    rc.core_threshold = doc.value("core_threshold", rc.core_threshold);
    if (auto it = doc.find("link_predicate"); it != doc.end()) {
      auto p = parse_link_predicate(it->get<std::string>());
      if (!p) throw InvalidArgument("unknown link predicate '" + it->get<std::string>() + "'");
      rc.graph.predicate = *p;
    }
    rc.graph.keyword_min_shared = doc.value("keyword_min_shared", rc.graph.keyword_min_shared);
    if (auto it = doc.find("venue_countries"); it != doc.end()) {
      rc.venue_countries = it->get<std::map<std::string, std::string>>();
    }
  } catch (const json::exception& e) {
    throw Error(std::string("invalid configuration: ") + e.what());
  }
  rc.check();
  return rc;
}

RunConfig load_run_config(const std::optional<std::filesystem::path>& path) {
  if (!path) return {};
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw Error("cannot read configuration " + path->string());
  std::stringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

}  // namespace prosopo::cli
