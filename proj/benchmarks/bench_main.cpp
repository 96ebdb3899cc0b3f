#include <benchmark/benchmark.h>

#include <numbers>

#include "qdc/analysis.hpp"
#include "qdc/circuits.hpp"
#include "qdc/classical.hpp"
#include "qdc/sampling.hpp"
#include "qdc/witness.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_QdcState(benchmark::State& state) {
  const qdc::QdcParams params{kPi / 8.0, 0.7, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdc::qdc_state(params));
  }
}
BENCHMARK(BM_QdcState);

void BM_HybridState(benchmark::State& state) {
  const qdc::HybridParams params{0.4, kPi / 8.0, 0.7, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdc::hybrid_state(params));
  }
}
BENCHMARK(BM_HybridState);

void BM_EntanglerState(benchmark::State& state) {
  const qdc::EntanglerParams params{0.0, kPi / 4.0, kPi / 4.0, 0.0, 0.5, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdc::entangler_state(params));
  }
}
BENCHMARK(BM_EntanglerState);

void BM_Concurrence(benchmark::State& state) {
  const qdc::PureState s =
      qdc::entangler_state({0.0, kPi / 4.0, kPi / 4.0, 0.0, 0.5, 0.8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdc::concurrence(s, {0.8, 0.5}));
  }
}
BENCHMARK(BM_Concurrence);

void BM_LinearWitnessPoint(benchmark::State& state) {
  const qdc::SettingFamily family =
      qdc::SettingFamily::defaults(qdc::WitnessKind::linear_idw);
  for (auto _ : state) {
    const qdc::PamSettings settings = family.instantiate(kPi / 4.0, kPi / 4.0);
    benchmark::DoNotOptimize(qdc::linear_witness(qdc::prob_table(settings)));
  }
}
BENCHMARK(BM_LinearWitnessPoint);

void BM_DeterminantWitnessPoint(benchmark::State& state) {
  const qdc::SettingFamily family =
      qdc::SettingFamily::defaults(qdc::WitnessKind::nonlinear_det);
  for (auto _ : state) {
    const qdc::PamSettings settings = family.instantiate(0.9, kPi / 5.0);
    benchmark::DoNotOptimize(qdc::nonlinear_witness(qdc::prob_table(settings)));
  }
}
BENCHMARK(BM_DeterminantWitnessPoint);

void BM_WitnessSweep(benchmark::State& state) {
  const qdc::SettingFamily family =
      qdc::SettingFamily::defaults(qdc::WitnessKind::linear_idw);
  const int n = static_cast<int>(state.range(0));
  std::vector<double> phis(n), thetas(n);
  for (int i = 0; i < n; ++i) {
    phis[i] = 2.0 * kPi * i / n;
    thetas[i] = (kPi / 4.0) * i / (n - 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdc::sweep_witness(qdc::WitnessKind::linear_idw, family, phis, thetas));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_WitnessSweep)->Arg(16)->Arg(64);

void BM_ClassicalDeterministicMax(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdc::classical_max(qdc::WitnessKind::linear_idw, 3, 2, 2, 0, 0));
  }
}
BENCHMARK(BM_ClassicalDeterministicMax);

void BM_ClassicalMixtures(benchmark::State& state) {
  const int mixtures = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdc::classical_max(qdc::WitnessKind::nonlinear_det, 4, 2, 2, mixtures, 7));
  }
  state.SetItemsProcessed(state.iterations() * mixtures);
}
BENCHMARK(BM_ClassicalMixtures)->Arg(1000)->Arg(10000);

void BM_SampleCounts(benchmark::State& state) {
  const qdc::PamSettings settings =
      qdc::SettingFamily::defaults(qdc::WitnessKind::linear_idw)
          .instantiate(kPi / 4.0, kPi / 4.0);
  const qdc::NoiseConfig noise{state.range(0), 0.5, 0.9, 42};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdc::sample_counts(settings, noise));
  }
  state.SetItemsProcessed(state.iterations() * 6 * noise.shots_per_setting);
}
BENCHMARK(BM_SampleCounts)->Arg(1000000)->Arg(10000000);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
