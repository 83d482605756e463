#pragma once

#include "prosopo/analytics.hpp"
#include "prosopo/citation_graph.hpp"
#include "prosopo/corpus.hpp"
#include "prosopo/error.hpp"
#include "prosopo/fixtures.hpp"
#include "prosopo/fraction.hpp"
#include "prosopo/name_resolver.hpp"
#include "prosopo/types.hpp"
