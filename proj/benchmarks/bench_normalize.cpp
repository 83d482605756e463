#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "prosopo/prosopo.hpp"

namespace {

const std::vector<std::string> kSurfaces{
    "M. Hermite", "M. L. Königsberger", "H.J.S. Smith", "le P. Pépin", "M. Mittag-Leffler, jeune géomètre",
    "Göpel", "MM. Briot et Bouquet", "M. C.-O. Meyer", "Gyldén", "ce savant géomètre M. Fuchs"};

void BM_Fold(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& s : kSurfaces) benchmark::DoNotOptimize(prosopo::fold_text(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSurfaces.size()));
}
BENCHMARK(BM_Fold);

void BM_Normalize(benchmark::State& state) {
  const prosopo::ResolverConfig config;
  for (auto _ : state) {
    for (const auto& s : kSurfaces) benchmark::DoNotOptimize(prosopo::normalize_surface(s, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSurfaces.size()));
}
BENCHMARK(BM_Normalize);

void BM_ClassifyRole(benchmark::State& state) {
  const prosopo::ResolverConfig config;
  const prosopo::RawMention m{"M. Paul Mansion", "l'article est extrait d'une lettre de H. à lui du 25 novembre 1875",
                              std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(prosopo::classify_role(m, config));
}
BENCHMARK(BM_ClassifyRole);

}  // namespace
