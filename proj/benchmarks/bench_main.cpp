#include <benchmark/benchmark.h>

#include <random>

#include "newton_strata/affine.hpp"
#include "newton_strata/isocrystal.hpp"
#include "newton_strata/qbg.hpp"
#include "newton_strata/strata.hpp"

using namespace newton_strata;

namespace {

AffineElement example() {
  return AffineElement::from_normal_form(WeylElement::from_word(5, {4, 2, 3, 1}), {150, 75, 0, -75, -150},
                                         WeylElement::from_word(5, {1, 2, 3, 4, 2, 3, 1}));
}

void BM_QbgBuild(benchmark::State& state) {
  const auto cartan = CartanData::type_a(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(QuantumBruhatGraph(cartan).edge_count());
}
BENCHMARK(BM_QbgBuild)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SearchA4(benchmark::State& state) {
  const QuantumBruhatGraph graph(CartanData::type_a(4));
  const auto sigma = DiagramAutomorphism::identity(4);
  for (auto _ : state) benchmark::DoNotOptimize(search_triples(graph, sigma, 1).size());
}
BENCHMARK(BM_SearchA4)->Unit(benchmark::kMillisecond);

void BM_AffineLength(benchmark::State& state) {
  const auto& cartan = CartanData::type_a_cached(4);
  const auto x = example();
  for (auto _ : state) benchmark::DoNotOptimize(affine_length(cartan, x.lambda(), x.finite_part()));
}
BENCHMARK(BM_AffineLength);

void BM_NormalForm(benchmark::State& state) {
  const auto x = example();
  for (auto _ : state) benchmark::DoNotOptimize(AffineElement(x.lambda(), x.finite_part()).normal_form());
}
BENCHMARK(BM_NormalForm);

void BM_Analyze(benchmark::State& state) {
  const QuantumBruhatGraph graph(CartanData::type_a(4));
  const TripleCandidate c{WeylElement::from_word(5, {4, 2, 3, 1}), WeylElement::from_word(5, {1, 2, 3, 4, 2, 3, 1}), 2,
                          DiagramAutomorphism::identity(4)};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c, {150, 75, 0, -75, -150}, 74, {}, graph).chains.size());
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMicrosecond);

// One Monte-Carlo sample of the example at the precision floor.
void BM_MonteCarloSample(benchmark::State& state) {
  const auto x = example();
  SamplerConfig cfg;
  cfg.samples = 1;
  cfg.stability_recheck = false;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_generic_newton(x, cfg).samples);
    ++cfg.seed;
  }
}
BENCHMARK(BM_MonteCarloSample)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
