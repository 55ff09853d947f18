#include <benchmark/benchmark.h>

#include <random>

#include "toric/cones.hpp"
#include "toric/divisor.hpp"
#include "toric/hilbert.hpp"
#include "toric/intlin.hpp"
#include "toric/toric.hpp"

using namespace toric;

namespace {

IntMat random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

// Row a_1 = (1, ..., 1, -k) in k + 1 variables: the cone over a rational normal curve.
IntMat veronese_row(std::size_t k) {
  IntMat a(1, k + 1);
  for (std::size_t i = 0; i < k; ++i) a(0, i) = 1;
  a(0, k) = -static_cast<long>(k);
  return a;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const IntMat m = random_square(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(intlin::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 16, 4);

static void BM_HilbertBasis(benchmark::State& state) {
  const IntMat a = veronese_row(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::hilbert_basis(a));
}
BENCHMARK(BM_HilbertBasis)->DenseRange(2, 5);

static void BM_Classify(benchmark::State& state) {
  const LatticePresentation p(veronese_row(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_Classify)->DenseRange(2, 4);

static void BM_MinimalObstruction(benchmark::State& state) {
  const auto profile = classify(LatticePresentation(veronese_row(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::minimal_obstruction(profile.basis));
}
BENCHMARK(BM_MinimalObstruction)->DenseRange(2, 4);

static void BM_DualCone(benchmark::State& state) {
  const auto profile = classify(LatticePresentation(veronese_row(static_cast<std::size_t>(state.range(0)))));
  const auto cone = cones::RationalCone::from_generators(profile.n(), profile.basis.basis.column_list());
  for (auto _ : state) benchmark::DoNotOptimize(cones::dual_cone(cone));
}
BENCHMARK(BM_DualCone)->DenseRange(2, 5);

static void BM_DecideCounterexample(benchmark::State& state) {
  const auto profile = classify(LatticePresentation(veronese_row(static_cast<std::size_t>(state.range(0)))));
  const auto problem = divisor::generate_counterexample(profile);
  for (auto _ : state) benchmark::DoNotOptimize(divisor::decide_extension(problem));
}
BENCHMARK(BM_DecideCounterexample)->DenseRange(2, 4);

BENCHMARK_MAIN();
