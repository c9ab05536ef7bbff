#include <benchmark/benchmark.h>

#include <cmath>

#include "kinkfac/frame.hpp"
#include "kinkfac/ode_verify.hpp"
#include "kinkfac/pde_sim.hpp"

using namespace kinkfac;

namespace {

void BM_SweepCurves(benchmark::State& state) {
  const auto model = state.range(0) == 0 ? CurveModel::Paper : CurveModel::Exact;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_curves(model, 0.0, 10.0, 401));
}
BENCHMARK(BM_SweepCurves)->Arg(0)->Arg(1);

void BM_Integrate(benchmark::State& state) {
  const double lambda0 = 2.0;
  const double alpha = exact_alphas(lambda0)[0].alpha;
  const KinkSample mid = kink_eval(exact_kink(alpha, lambda0), 0.0);
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(alpha, lambda0, mid.f, mid.df, {0.0, 20.0}, h));
  state.SetItemsProcessed(state.iterations() * 20 * state.range(0));
}
BENCHMARK(BM_Integrate)->Arg(100)->Arg(1000);

void BM_PdeStep(benchmark::State& state) {
  GridConfig cfg;
  cfg.lambda0 = 2.0;
  const double alpha = exact_alphas(cfg.lambda0)[0].alpha;
  FieldState s = init_state(cfg, exact_kink(alpha, cfg.lambda0), alpha);
  std::vector<double> scratch;
  for (auto _ : state) {
    step_in_place(s, cfg, scratch);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cfg.size()));
}
BENCHMARK(BM_PdeStep);

void BM_PdeRun(benchmark::State& state) {
  GridConfig cfg;
  cfg.lambda0 = 2.0;
  cfg.t_max = 10.0;
  const double alpha = exact_alphas(cfg.lambda0)[0].alpha;
  const KinkSolution k = exact_kink(alpha, cfg.lambda0);
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg, k, alpha));
}
BENCHMARK(BM_PdeRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
