#include <benchmark/benchmark.h>

#include "euclid/machine.hpp"
#include "euclid/measure.hpp"
#include "euclid/mensura.hpp"
#include "euclid/solids.hpp"
#include "euclid/svg.hpp"

using namespace euclid;

static void BM_PiTableDouble(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi_doubling_table<double>(static_cast<int>(state.range(0)), true));
  }
}
BENCHMARK(BM_PiTableDouble)->Arg(5)->Arg(24);

static void BM_PiTableInterval(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi_doubling_table<Interval>(static_cast<int>(state.range(0)), true));
  }
}
BENCHMARK(BM_PiTableInterval)->Arg(5)->Arg(24);

static void BM_Heron(benchmark::State& state) {
  double a = 7, b = 6, c = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(heron_area(a, b, c));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Heron);

static void BM_TriangleMetrics(benchmark::State& state) {
  const TriangleSides t = make_triangle_sides(7, 6, 10);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_metrics(t));
}
BENCHMARK(BM_TriangleMetrics);

static void BM_ContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    const CFExpansion cf = continued_fraction(3.14159265358979, 20);
    benchmark::DoNotOptimize(convergents(cf));
  }
}
BENCHMARK(BM_ContinuedFraction);

static void BM_InscribeRegular(benchmark::State& state) {
  const double n = static_cast<double>(state.range(0));
  for (auto _ : state) {
    Machine m;
    m.free_point("O", {0, 0});
    m.free_point("U", {1, 0});
    m.circle("c", "O", "U");
    benchmark::DoNotOptimize(m.call("inscribe_regular", {"P"}, {n, "c"}));
  }
}
BENCHMARK(BM_InscribeRegular)->Arg(5)->Arg(16)->Arg(60);

static void BM_GoldenSectionScript(benchmark::State& state) {
  RunOptions o;
  o.emit = [](const Emit&, const Workspace&) {};
  const char* text =
      "point A = (0, 0)\npoint B = (1, 0)\nmacro G = golden_section(A, B)\n"
      "assert dist(A, G) * dist(A, G) == dist(A, B) * dist(G, B)\n";
  for (auto _ : state) benchmark::DoNotOptimize(run_script(text, o));
}
BENCHMARK(BM_GoldenSectionScript);

static void BM_RenderSvg(benchmark::State& state) {
  RunOptions o;
  o.emit = [](const Emit&, const Workspace&) {};
  const Workspace ws = run_script(
      "point O = (0, 0)\npoint U = (1, 0)\ncircle c = circle(O, U)\n"
      "macro P = inscribe_regular(24, c)\n",
      o);
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(ws));
}
BENCHMARK(BM_RenderSvg);

static void BM_Lantern(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schwarz_lantern_area({1, 1, 512, 512}));
}
BENCHMARK(BM_Lantern);
BENCHMARK_MAIN();
