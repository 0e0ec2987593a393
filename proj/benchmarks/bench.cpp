#include <benchmark/benchmark.h>

#include "lcl/digital.hpp"
#include "lcl/generators.hpp"
#include "lcl/lcl_check.hpp"
#include "lcl/roi.hpp"

using namespace lcl;

static void BM_CheckLclBrick(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Tiling2 t = gen_brick(n, n, true);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_lcl_2d(t.complex, t.faces));
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_CheckLclBrick)->Arg(4)->Arg(8)->Arg(16)->Complexity();

static void BM_IntersectionGraph(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Tiling2 t = gen_trunc_square(n, n, true);
  for (auto _ : state)
    benchmark::DoNotOptimize(intersection_graph(t.complex, t.faces));
}
BENCHMARK(BM_IntersectionGraph)->Arg(4)->Arg(8)->Arg(16);

static void BM_EulerCharacteristic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Tiling2 t = gen_brick(n, n, true);
  Graph g = intersection_graph(t.complex, t.faces);
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(g));
}
BENCHMARK(BM_EulerCharacteristic)->Arg(4)->Arg(8)->Arg(16);

static void BM_Manifold2Check(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Tiling2 t = gen_brick(n, n, true);
  Graph g = intersection_graph(t.complex, t.faces);
  std::set<Id> interior = g.point_set();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_digital_2_manifold(g, interior));
}
BENCHMARK(BM_Manifold2Check)->Arg(8)->Arg(16);

static void BM_Discretize64(benchmark::State& state) {
  Mask m;
  m.width = 64;
  m.height = 64;
  m.maxval = 255;
  m.threshold = 127;
  m.values.assign(64 * 64, 0);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x)
      if ((x - 32) * (x - 32) + (y - 32) * (y - 32) <= 64)
        m.values[static_cast<std::size_t>(y) * 64 + x] = 255;
  PipelineParams p;
  for (auto _ : state) benchmark::DoNotOptimize(discretize(m, p));
}
BENCHMARK(BM_Discretize64);

BENCHMARK_MAIN();
