#include <benchmark/benchmark.h>

#include "oscsum/deltamethod.hpp"
#include "oscsum/forms.hpp"
#include "oscsum/quad.hpp"
#include "oscsum/twist.hpp"
#include "oscsum/voronoi.hpp"

using namespace oscsum;

static void BM_BuildEigenform(benchmark::State& state) {
  std::size_t N = (std::size_t)state.range(0);
  for (auto _ : state) {
    auto t = build_eigenform(12, N);
    benchmark::DoNotOptimize(t.lambda.data());
  }
  state.SetItemsProcessed((long long)(state.iterations() * N));
}
BENCHMARK(BM_BuildEigenform)->Arg(10000)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyHecke(benchmark::State& state) {
  auto t = build_eigenform(12, (std::size_t)state.range(0));
  for (auto _ : state) {
    auto rep = verify_hecke(t, 1e-10);
    benchmark::DoNotOptimize(rep.max_mult_defect);
  }
}
BENCHMARK(BM_VerifyHecke)->Arg(10000)->Arg(100000)
    ->Unit(benchmark::kMillisecond);

static void BM_OscillatoryIntegral(benchmark::State& state) {
  double w = (double)state.range(0);
  for (auto _ : state) {
    auto v = oscillatory_integral([](double) { return 1.0; },
                                  [w](double x) { return w * x * x; },
                                  [w](double x) { return 2.0 * w * x; }, 0.0,
                                  1.0, 1e-10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_OscillatoryIntegral)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_TwistSum(benchmark::State& state) {
  double X = (double)state.range(0);
  auto f = build_eigenform(12, (std::size_t)(2 * X) + 2);
  auto g = build_eigenform(16, (std::size_t)(2 * X) + 2);
  TwistSpec spec = TwistSpec::make(PhaseSpec::log_phase(1.0), 100.0, X,
                                   make_window(1.0, 2.0, 4.0));
  for (auto _ : state) {
    auto v = eval_twist_sum(f, g, spec);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed((long long)(state.iterations() * (long long)X));
}
BENCHMARK(BM_TwistSum)->Arg(10000)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

static void BM_DfiDelta(benchmark::State& state) {
  DeltaScheme s = DeltaScheme::make((double)state.range(0));
  for (auto _ : state) {
    double v = dfi_delta(1, s);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DfiDelta)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_PhiExact(benchmark::State& state) {
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  double x = (double)state.range(0);
  for (auto _ : state) {
    auto v = phi_h_exact(x, h, 12, 1e-10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PhiExact)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ConvolveGl5(benchmark::State& state) {
  std::size_t N = (std::size_t)state.range(0);
  auto f = build_eigenform(12, N);
  auto g = build_eigenform(16, N);
  for (auto _ : state) {
    auto l5 = convolve_gl5(f, g, N);
    benchmark::DoNotOptimize(l5.data());
  }
  state.SetItemsProcessed((long long)(state.iterations() * N));
}
BENCHMARK(BM_ConvolveGl5)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
