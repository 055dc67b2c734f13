#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hnpoly/bigraded.hpp"
#include "hnpoly/bundles.hpp"
#include "hnpoly/coupling.hpp"
#include "hnpoly/filtration.hpp"
#include "hnpoly/measure.hpp"
#include "hnpoly/polygon.hpp"
#include "../tests/testing.hpp"

namespace {

using namespace hnpoly;

void BM_BuildRho(benchmark::State& state) {
  const long d = state.range(0);
  const std::vector<long> n_vec = {5, 5, 5};
  for (auto _ : state) {
    CouplingMeasure rho = build_rho(n_vec, d);
    benchmark::DoNotOptimize(rho.weights.size());
  }
}
BENCHMARK(BM_BuildRho)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExpandSliceTwoFactors(benchmark::State& state) {
  BiSeries p = BiSeries::one({0, 1});
  const long n = state.range(0);
  for (auto _ : state) {
    SliceResult s = expand_slice(p, n);
    benchmark::DoNotOptimize(s.total);
  }
}
BENCHMARK(BM_ExpandSliceTwoFactors)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ExpandSliceThreeFactors(benchmark::State& state) {
  BiSeries p = BiSeries::one({0, 1, 3});
  const long n = state.range(0);
  for (auto _ : state) {
    SliceResult s = expand_slice(p, n);
    benchmark::DoNotOptimize(s.total);
  }
}
BENCHMARK(BM_ExpandSliceThreeFactors)->Arg(200)->Unit(benchmark::kMillisecond);

// measure -> polygon -> exact sup distance against a sheared copy
void BM_PolygonPipeline(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<DiracMeasure> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(testing::random_probability(rng, 8));
  std::size_t i = 0;
  for (auto _ : state) {
    const DiracMeasure& nu = pool[i++ % pool.size()];
    Polygon p = polygon_of(nu);
    Rat dist = sup_distance(p, shear_polygon(p, rat(1, 3)));
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_PolygonPipeline);

void BM_MaximalBase(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const std::size_t dim = 6;
  std::vector<std::pair<FilteredSpace, Mat>> pool;
  for (int i = 0; i < 16; ++i)
    pool.push_back({testing::random_space(rng, dim),
                    testing::random_invertible(rng, dim)});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [space, seed] = pool[i++ % pool.size()];
    MaximalBase mb = maximal_base(space, seed);
    benchmark::DoNotOptimize(mb.basis);
  }
}
BENCHMARK(BM_MaximalBase);

void BM_SymMeasure(benchmark::State& state) {
  const std::vector<BundleSummand> pair = {{Rat(0), 1}, {Rat(1), 1}};
  const long n = state.range(0);
  for (auto _ : state) {
    DiracMeasure nu = sym_measure(pair, n);
    benchmark::DoNotOptimize(nu.atoms().size());
  }
}
BENCHMARK(BM_SymMeasure)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
