// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "ft422/fit.hpp"
#include "ft422/gates.hpp"
#include "ft422/pipelines.hpp"
#include "ft422/reference_data.hpp"

namespace bm = benchmark;
using namespace ft422;

static void BM_ApplyCnotDensity5q(bm::State& state) {
  QuantumState reg(5);
  reg.densify();
  const UnitarySpec cnot(gates::cnot(), {0, 4});
  for (auto _ : state) {
    reg = apply_unitary(reg, cnot);
    bm::DoNotOptimize(reg);
  }
}
BENCHMARK(BM_ApplyCnotDensity5q);

static void BM_PrepExactStatistics(bm::State& state) {
  const PrepTarget target = PrepTarget::z(1, 1);
  NoiseConfig noise = NoiseConfig::device_defaults();
  noise.damping_during_prep = true;
  const Circuit circuit = build_prep_circuit(target);
  for (auto _ : state) {
    const auto summary =
        exact_statistics(pipelines::exact_outcome_distribution(circuit, noise), target);
    bm::DoNotOptimize(summary.acceptance);
  }
}
BENCHMARK(BM_PrepExactStatistics)->Unit(bm::kMillisecond);

static void BM_SweepPointSampled(bm::State& state) {
  const PrepTarget target = PrepTarget::z(1, 1);
  const NoiseConfig noise = NoiseConfig::device_defaults();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto point =
        pipelines::run_sweep_point(target, pipelines::SweepSite::a, 0.8, noise, 100000, seed++,
                                   false);
    bm::DoNotOptimize(point.sampled.acceptance);
  }
}
BENCHMARK(BM_SweepPointSampled)->Unit(bm::kMillisecond);

static void BM_DecayModelPoint(bm::State& state) {
  const analytic::DecayModelParams params = analytic::DecayModelParams::ideal_codeword(
      {1, 1, 0, 0}, reference::kDecayFitT1Us, reference::kDecayFitP0, reference::kDecayFitP1);
  double t = 0.0;
  for (auto _ : state) {
    bm::DoNotOptimize(analytic::decay_model(t, params));
    t += 0.1;
    if (t > 150.0) t = 0.0;
  }
}
BENCHMARK(BM_DecayModelPoint);

static void BM_IdleEvolution10us(bm::State& state) {
  const NoiseConfig dev = NoiseConfig::device_defaults();
  QuantumState reg(5);
  for (int q = 0; q < 4; ++q) reg = apply_unitary(reg, UnitarySpec(gates::h(), {q}));
  reg = apply_unitary(reg, UnitarySpec(gates::x(), {kS1}));
  reg.densify();
  IdleOptions options;
  options.trotter_slices = static_cast<int>(state.range(0));
  for (auto _ : state) {
    bm::DoNotOptimize(idle_evolution(reg, dev, 10.0, options));
  }
}
BENCHMARK(BM_IdleEvolution10us)->Arg(100)->Arg(400)->Unit(bm::kMillisecond);

static void BM_TomographyExact(bm::State& state) {
  const Circuit circuit = build_prep_circuit(PrepTarget::z(1, 1));
  for (auto _ : state) {
    bm::DoNotOptimize(tomo::simulate_tomography(circuit, NoiseConfig::ideal(), 100, 1, true));
  }
}
BENCHMARK(BM_TomographyExact)->Unit(bm::kMillisecond);

static void BM_TomographyReconstruct(bm::State& state) {
  const Circuit circuit = build_prep_circuit(PrepTarget::z(1, 1));
  const tomo::TomoDataset ds =
      tomo::simulate_tomography(circuit, NoiseConfig::device_defaults(), 1000, 3, false);
  for (auto _ : state) {
    bm::DoNotOptimize(tomo::reconstruct(ds));
  }
}
BENCHMARK(BM_TomographyReconstruct)->Unit(bm::kMillisecond);

static void BM_InsertionFit(bm::State& state) {
  fit::InsertionValueSet truth;
  truth.delta = reference::kInsertionFit.delta;
  truth.a = reference::kInsertionFit.a;
  truth.b = reference::kInsertionFit.b;
  truth.c_protected = reference::kInsertionFit.c_protected;
  truth.d_protected = reference::kInsertionFit.d_protected;
  truth.c_gauge = reference::kInsertionFit.c_gauge;
  truth.d_gauge = reference::kInsertionFit.d_gauge;
  std::vector<double> grid;
  for (int i = 0; i < 25; ++i) grid.push_back(3.141592653589793 * i / 24.0);
  const auto curves = fit::insertion_curves_from_values(truth, grid);
  for (auto _ : state) {
    bm::DoNotOptimize(fit::fit_insertion(curves));
  }
}
BENCHMARK(BM_InsertionFit)->Unit(bm::kMillisecond);

BENCHMARK_MAIN();
