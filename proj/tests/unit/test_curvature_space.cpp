#include <gtest/gtest.h>

#include <random>

#include "curvlab/curvlab.hpp"
#include "oracles.hpp"

using namespace curvlab;

namespace {
long choose(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST(CurvatureSpace, Dimensions) {
  for (int n = 2; n <= 7; ++n)
    EXPECT_EQ(cached_curvature_space(StructureKind::generic, n)->dim(), n * n * (n * n - 1) / 12);
  for (int m = 1; m <= 4; ++m)
    EXPECT_EQ(cached_curvature_space(StructureKind::kaehler, m)->dim(), m * m * (m + 1) * (m + 1) / 4);
  for (int m = 2; m <= 4; ++m)
    EXPECT_EQ(cached_curvature_space(StructureKind::quaternion_kaehler, m)->dim(), choose(2 * m + 3, 4) + 1);
}

TEST(CurvatureSpace, SamplesSatisfyBianchiAndLieInAlgebra) {
  std::mt19937_64 rng(21);
  for (StructureKind kind : {StructureKind::kaehler, StructureKind::quaternion_kaehler}) {
    for (int m = 2; m <= 3; ++m) {
      const auto space = cached_curvature_space(kind, m);
      const HolonomyAlgebra& a = space->algebra();
      for (int t = 0; t < 5; ++t) {
        const CurvatureTensor rm = space->sample(rng);
        EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-12);
        EXPECT_LT(off_algebra_mass(to_operator(rm).matrix(), a), 1e-10);
        const Matrix r = project(to_operator(rm), a).matrix();
        EXPECT_LT((tensor_from_restricted(r, a) - rm).tensor().max_abs(), 1e-11);
      }
      const Matrix c = bianchi_constraint(a);
      EXPECT_LT((c * space->kernel_basis()).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(CurvatureSpace, GenericSamplerIsBianchiProjection) {
  std::mt19937_64 rng(22);
  const auto space = cached_curvature_space(StructureKind::generic, 5);
  const Matrix s = space->sample_restricted(rng);
  EXPECT_EQ(s.rows(), 10);
  const CurvatureTensor rm = tensor_from_restricted(s, space->algebra());
  EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-12);
}

TEST(CurvatureSpace, SamplingIsDeterministic) {
  const auto space = cached_curvature_space(StructureKind::quaternion_kaehler, 2);
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(space->sample_restricted(a), space->sample_restricted(b));
}

TEST(CurvatureSpace, SymmetricCoordinates) {
  Vector v(3);
  v << 1.0, 2.0, 3.0;
  const Matrix s = symmetric_from_coordinates(v, 2);
  EXPECT_LT((s - s.transpose()).norm(), 1e-15);
  EXPECT_NEAR(s.squaredNorm(), v.squaredNorm(), 1e-14);
  EXPECT_THROW(symmetric_from_coordinates(v, 3), DimensionError);
}
