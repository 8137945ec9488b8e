#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "triphoton/interference.hpp"
#include "triphoton/permanent.hpp"

using namespace triphoton;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = {dist(rng), dist(rng)};
  return m;
}

void PermanentRyser(benchmark::State& state) {
  const ComplexMatrix m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent_ryser(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PermanentRyser)->DenseRange(3, 15, 3)->Complexity();

void PermanentEnumerate(benchmark::State& state) {
  const ComplexMatrix m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent_enumerate(m));
  }
}
BENCHMARK(PermanentEnumerate)->DenseRange(3, 8, 1);

void TransferMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(transfer_matrix({1.3, 0.7, 0.2, -0.4}));
  }
}
BENCHMARK(TransferMatrix);

void CoincidenceAmplitude(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(coincidence_amplitude({1.3, 0.7, 0.2, -0.4}));
  }
}
BENCHMARK(CoincidenceAmplitude);

void EvolveThreePhotons(benchmark::State& state) {
  const Occupation input(1, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve({1.3, 0.7, 0.2, -0.4}, input));
  }
}
BENCHMARK(EvolveThreePhotons);

void ContourColumn(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_contour_numeric({kPi}, 0.0, kPi));
  }
}
BENCHMARK(ContourColumn)->Unit(benchmark::kMillisecond);

void LandscapeGrid(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coincidence_landscape(0.0, 4.0 * kPi, -kPi / 2.0, kPi, res, res));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(LandscapeGrid)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
