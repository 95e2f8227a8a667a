#include <benchmark/benchmark.h>

#include "specoh/builtin_species.hpp"
#include "specoh/cobar.hpp"
#include "specoh/cochains.hpp"
#include "specoh/koszul.hpp"
#include "specoh/products.hpp"
#include "specoh/registry.hpp"

using namespace specoh;

// Fresh species each iteration so the orbit tables are rebuilt.
static void BM_GraphOrbitTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GraphSpecies g;
    benchmark::DoNotOptimize(g.orbit_table(n).orbits.size());
  }
}
BENCHMARK(BM_GraphOrbitTable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_GraphKoszulDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = std::make_shared<GraphSpecies>();
    benchmark::DoNotOptimize(koszul_cohomology(g, n).dimension);
  }
}
BENCHMARK(BM_GraphKoszulDimension)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_OracleCohomology(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto sp = global_registry().get("P");
  sp->orbit_table(q + 1);
  for (auto _ : state) benchmark::DoNotOptimize(truncated_cohomology(sp, q, q + 1).dimension);
}
BENCHMARK(BM_OracleCohomology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CoboundaryRank(benchmark::State& state) {
  const auto sp = global_registry().get("L");
  const auto m = coboundary_matrix(sp, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_CoboundaryRank)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CobarLinearOrders(benchmark::State& state) {
  const auto sp = global_registry().get("L");
  for (auto _ : state) {
    const CobarComplex c(sp, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c.cohomology_by_blocks());
  }
}
BENCHMARK(BM_CobarLinearOrders)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CupLinearOrders(benchmark::State& state) {
  const auto l = global_registry().get("L");
  const int p = static_cast<int>(state.range(0));
  const auto f = linear_order_generator(l, p);
  for (auto _ : state) benchmark::DoNotOptimize(cup_koszul(f, f));
}
BENCHMARK(BM_CupLinearOrders)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
