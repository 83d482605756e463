#include <benchmark/benchmark.h>

#include "prosopo/prosopo.hpp"

namespace {

prosopo::CorpusData corpus_of(int articles) {
  prosopo::FixtureOptions opts;
  opts.max_articles = articles;
  opts.persons = articles / 2 + 4;
  opts.internal_reference_rate = 2.0 / articles;
  // the generator draws the article count; retry until it is close to the cap
  for (std::uint64_t seed = 1;; ++seed) {
    auto d = prosopo::generate_fixture(seed, opts);
    if (static_cast<int>(d.articles.size()) * 10 >= articles * 9) return d;
  }
}

void BM_BuildGraph(benchmark::State& state) {
  const auto corpus = prosopo::Corpus::build(corpus_of(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(prosopo::build_citation_graph(corpus));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.articles().size()));
}
BENCHMARK(BM_BuildGraph)->Arg(50)->Arg(200);

void BM_Clusters(benchmark::State& state) {
  const auto corpus = prosopo::Corpus::build(corpus_of(static_cast<int>(state.range(0))));
  const auto graph = prosopo::build_citation_graph(corpus);
  for (auto _ : state) benchmark::DoNotOptimize(prosopo::compute_clusters(graph));
}
BENCHMARK(BM_Clusters)->Arg(50)->Arg(200)->Arg(800);

void BM_Subnetworks(benchmark::State& state) {
  const auto corpus = prosopo::Corpus::build(corpus_of(static_cast<int>(state.range(0))));
  const auto graph = prosopo::build_citation_graph(corpus);
  for (auto _ : state) benchmark::DoNotOptimize(prosopo::detect_subnetworks(graph));
}
BENCHMARK(BM_Subnetworks)->Arg(50)->Arg(200);

void BM_Crosstab(benchmark::State& state) {
  const auto corpus = prosopo::Corpus::build(corpus_of(static_cast<int>(state.range(0))));
  const auto periods = prosopo::PeriodScheme::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(prosopo::generation_crosstab(corpus, periods, {}));
}
BENCHMARK(BM_Crosstab)->Arg(200)->Arg(800);

}  // namespace
