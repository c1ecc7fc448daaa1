#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "qint/coloring.hpp"
#include "qint/dehn_thurston.hpp"
#include "qint/metric.hpp"
#include "qint/quantum.hpp"
#include "qint/statesum.hpp"
#include "qint/surface.hpp"

namespace {

const std::vector<qint::ArcSystem>& corpus() {
  static const std::vector<qint::ArcSystem> systems = qint::generate_corpus();
  return systems;
}

void BM_Colorings(benchmark::State& state) {
  const auto surface = qint::standard_surface(3, "chain");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qint::enumerate_colorings(surface.graph, r));
}
BENCHMARK(BM_Colorings)->Arg(5)->Arg(9)->Arg(13);

void BM_CoefficientsOfCorpusSystem(benchmark::State& state) {
  const auto& a = corpus()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    for (const auto& shift : qint::enumerate_shifts(a)) benchmark::DoNotOptimize(qint::coefficient(a, shift));
  }
}
BENCHMARK(BM_CoefficientsOfCorpusSystem)->DenseRange(0, 5);

void BM_QuantumCount(benchmark::State& state) {
  const auto& a = corpus()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(qint::quantum_count(a));
}
BENCHMARK(BM_QuantumCount)->Arg(0)->Arg(10)->Arg(20);

void BM_Metrify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  qint::PairFunction f(labels);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> value(1, 40);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng() % 3 != 0) f.set(i, j, qint::ExtRational(qint::Rational(value(rng), 3)));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(qint::metrify(f));
}
BENCHMARK(BM_Metrify)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
