#include <random>

#include <benchmark/benchmark.h>

#include "curvlab/curvlab.hpp"

using namespace curvlab;

namespace {

void BM_Jacobi(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix s = random_symmetric(size, rng);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigen(s));
}
BENCHMARK(BM_Jacobi)->Arg(10)->Arg(28)->Arg(66);

void BM_LieAction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const CurvatureTensor rm = random_curvature_tensor(n, rng);
  const Bivector xi = Bivector::basis(n, 0, 1) + Bivector::basis(n, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lie_action(xi, rm.tensor()));
}
BENCHMARK(BM_LieAction)->Arg(4)->Arg(8)->Arg(12);

void BM_CurvatureSpace(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CurvatureSpace space(std::make_shared<const HolonomyAlgebra>(
        holonomy_algebra(EuclideanSpace::quaternion_kaehler(m))));
    benchmark::DoNotOptimize(space.dim());
  }
}
BENCHMARK(BM_CurvatureSpace)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HatNorm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto space = cached_curvature_space(StructureKind::quaternion_kaehler, m);
  std::mt19937_64 rng(3);
  const CurvatureTensor rm = space->sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hat_norm_sq_operator(rm, space->algebra()));
}
BENCHMARK(BM_HatNorm)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HatNormFormula(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto space = cached_curvature_space(StructureKind::quaternion_kaehler, m);
  std::mt19937_64 rng(4);
  const CurvatureOperator op(space->sample_restricted(rng), 1e-10);
  for (auto _ : state) benchmark::DoNotOptimize(hat_norm_formula(op, space->algebra()));
}
BENCHMARK(BM_HatNormFormula)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
