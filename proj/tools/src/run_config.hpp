#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "prosopo/prosopo.hpp"

namespace prosopo::cli {

/// Settings shared by all subcommands, read from the --config file
/// (or $PROSO_CONFIG) and overridden by flags.
struct RunConfig {
  ResolverConfig resolver;
  PeriodScheme periods = PeriodScheme::defaults();
  CohortScheme cohorts;
  double core_threshold = kDefaultCoreThreshold;
  GraphOptions graph;
  std::map<std::string, std::string> venue_countries;

  void check() const;
};

RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::optional<std::filesystem::path>& path);

}  // namespace prosopo::cli
