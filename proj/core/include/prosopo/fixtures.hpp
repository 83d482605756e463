#pragma once

#include <cstdint>

#include "prosopo/corpus.hpp"

namespace prosopo {

struct FixtureOptions {
  int max_articles = 12;
  int persons = 10;
  int venues = 3;
  int first_year = 1840;
  int last_year = 1900;
  double internal_reference_rate = 0.15;  // per ordered article pair
  double external_reference_rate = 0.5;   // per article
};

/// Small random corpus for property tests. Same seed, same corpus.
CorpusData generate_fixture(std::uint64_t seed, const FixtureOptions& options = {});

}  // namespace prosopo
