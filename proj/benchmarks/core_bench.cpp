#include <benchmark/benchmark.h>

#include "oddfactor/factor.hpp"
#include "oddfactor/families.hpp"
#include "oddfactor/graph6.hpp"
#include "oddfactor/harness.hpp"
#include "oddfactor/spectral.hpp"

using namespace oddfactor;

static void BM_DeficiencyEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = build_g_star({n, 1, 1, 2});
  SearchCaps caps;
  caps.subset_enum = n;
  for (auto _ : state)
    benchmark::DoNotOptimize(deficiency(g, {1, 1}, caps).max_deficiency);
}
BENCHMARK(BM_DeficiencyEnumeration)->Arg(11)->Arg(13)->Arg(15)->Arg(17);

static void BM_FactorSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = complete_graph(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(has_odd_factor(g, 3).has_value());
}
BENCHMARK(BM_FactorSearch)->Arg(8)->Arg(10)->Arg(12);

static void BM_SpectralRadius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = build_g_star({n, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g));
}
BENCHMARK(BM_SpectralRadius)->Arg(13)->Arg(25)->Arg(40);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = build_g_star({40, 1, 1, 2});
  const std::string line = emit_graph6(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(emit_graph6(parse_graph6(line)));
}
BENCHMARK(BM_Graph6RoundTrip);

static void BM_LargestRealRoot(benchmark::State& state) {
  const MonicCubic cubic = char_cubic(QuotientFamily::Bstar, 40, 3, 2, 4).phi;
  for (auto _ : state) benchmark::DoNotOptimize(largest_real_root(cubic));
}
BENCHMARK(BM_LargestRealRoot);

BENCHMARK_MAIN();
