#include <benchmark/benchmark.h>

#include "hejc/hejc.hpp"

using namespace hejc;

static void BM_StarkSolve(benchmark::State& state) {
  const double e_perp = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stark_solve(e_perp, 3));
}
BENCHMARK(BM_StarkSolve)->Arg(0)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ExpmHermitian(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  CMatrix a = CMatrix::Random(n, n);
  const CMatrix h = 0.5 * (a + a.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(expm_hermitian(h, 0.1));
}
BENCHMARK(BM_ExpmHermitian)->Arg(10)->Arg(22)->Arg(62);

static void BM_InteractionHamiltonian(benchmark::State& state) {
  const auto n_max = static_cast<int>(state.range(0));
  const DrivenHamiltonian h(DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 2e3, Sideband::red),
                            CouplingModel::full, n_max);
  CMatrix m;
  double t = 0.0;
  for (auto _ : state) {
    h.interaction(t, m);
    t += 1e-12;
    benchmark::DoNotOptimize(m.data());
  }
}
BENCHMARK(BM_InteractionHamiltonian)->Arg(4)->Arg(10)->Arg(30);

static void BM_DirectStep(benchmark::State& state) {
  const DrivenHamiltonian h(DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 2e3, Sideband::carrier),
                            CouplingModel::full, 4);
  CMatrix m;
  CVector psi = HybridState::fock(4, 0, Level::g).amplitudes();
  const double dt = 1.0 / (20.0 * h.max_frequency());
  double t = 0.0;
  for (auto _ : state) {
    h.interaction(t, m);
    apply_expm_hermitian(m, dt, psi);
    t += dt;
  }
  benchmark::DoNotOptimize(psi.data());
}
BENCHMARK(BM_DirectStep);

static void BM_ScaledRedSideband(benchmark::State& state) {
  const auto s = scaled_red_sideband(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_evolve(s.initial, s.drive, s.duration, CouplingModel::full));
  }
}
BENCHMARK(BM_ScaledRedSideband)->Unit(benchmark::kMillisecond);

static void BM_CoolingSweep(benchmark::State& state) {
  const auto drive = DriveSpec::scaled(1e9, 1e6, 0.01, 1e3, 2e3, Sideband::red);
  const auto initial = thermal_mixture(thermal_from_mean(2.0, 30));
  for (auto _ : state) benchmark::DoNotOptimize(run_cooling(initial, CoolingPlan{}, drive));
}
BENCHMARK(BM_CoolingSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
