#include <benchmark/benchmark.h>

#include "ecalc/ecalc.hpp"

using namespace ecalc;

static void BM_WeylEnumeration(benchmark::State& state) {
  const auto sys = RootSystem::build(static_cast<Preset>(state.range(0)));
  for (auto _ : state) {
    WeylGroup g(sys);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetLabel(preset_name(static_cast<Preset>(state.range(0))));
}
BENCHMARK(BM_WeylEnumeration)->Arg(static_cast<int>(Preset::SplitD4))->Arg(static_cast<int>(Preset::QuasiD4));

static void BM_ConstantTermSplitP(benchmark::State& state) {
  const auto sys = RootSystem::build(Preset::SplitD4);
  ConstantTermOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto ct = constant_term(sys, levi_P(sys), line_chi_P(sys), opts);
    benchmark::DoNotOptimize(ct.terms.data());
  }
  state.SetLabel(opts.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_ConstantTermSplitP)->Arg(0)->Arg(1);

static void BM_PoleReportSplitP(benchmark::State& state) {
  const auto sys = RootSystem::build(Preset::SplitD4);
  const auto ct = constant_term(sys, levi_P(sys), line_chi_P(sys));
  for (auto _ : state) {
    auto rep = pole_report(ct, Rational(3, 10));
    benchmark::DoNotOptimize(rep.order);
  }
}
BENCHMARK(BM_PoleReportSplitP);

static void BM_H0Exhaustive(benchmark::State& state) {
  const auto sys = RootSystem::build(static_cast<Preset>(state.range(0)));
  const WeylGroup g(sys);
  for (auto _ : state) {
    int ok = 0;
    for (int i = 1; i <= sys.rank(); ++i)
      for (const auto& w : g.elements()) ok += h0_cancellation_check(g, sys.simple_root(i), w);
    benchmark::DoNotOptimize(ok);
  }
  state.SetLabel(preset_name(static_cast<Preset>(state.range(0))));
}
BENCHMARK(BM_H0Exhaustive)->Arg(static_cast<int>(Preset::QuasiD4))->Arg(static_cast<int>(Preset::SplitD4))
    ->Unit(benchmark::kMillisecond);

static void BM_SiegelWeil(benchmark::State& state) {
  const auto sys = RootSystem::build(Preset::SplitD4);
  for (auto _ : state) {
    auto rep = siegel_weil_constant(sys);
    benchmark::DoNotOptimize(rep.constant.coeff);
  }
}
BENCHMARK(BM_SiegelWeil)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
