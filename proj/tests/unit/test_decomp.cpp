#include <gtest/gtest.h>

#include <random>

#include "curvlab/curvlab.hpp"
#include "oracles.hpp"

using namespace curvlab;

namespace {

void expect_orthogonal_split(const CurvatureDecomposition& d, const CurvatureTensor& rm) {
  EXPECT_LT((d.sum() - rm).tensor().max_abs(), 1e-9);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (std::size_t j = i + 1; j < d.parts.size(); ++j)
      EXPECT_NEAR(d.parts[i].tensor.dot(d.parts[j].tensor), 0.0, 1e-9);
  EXPECT_LE(d.max_overlap(), 1e-9);
}

}  // namespace

TEST(Decomp, WeylMatchesOracleFormula) {
  std::mt19937_64 rng(31);
  for (int n = 4; n <= 8; ++n) {
    const CurvatureTensor rm = oracle::random_curvature(n, rng);
    const CurvatureDecomposition d = weyl_decompose(rm);
    expect_orthogonal_split(d, rm);
    EXPECT_LT((d.part("weyl").tensor() - oracle::weyl(rm.tensor())).max_abs(), 1e-12);
    EXPECT_LT(total_traces(d.part("weyl").tensor(), EuclideanSpace::generic(n)).metric, 1e-10);
    EXPECT_NEAR(d.coefficient("scal"), oracle::scalar(rm.tensor()), 1e-10);
  }
}

TEST(Decomp, WeylOfConstantCurvatureVanishes) {
  const CurvatureDecomposition d = weyl_decompose(sphere(6));
  EXPECT_LT(d.part("weyl").tensor().max_abs(), 1e-12);
  EXPECT_LT(d.part("ric0_part").tensor().max_abs(), 1e-12);
}

TEST(Decomp, WeylOfWeylTensorIsIdentity) {
  std::mt19937_64 rng(32);
  const CurvatureTensor w = weyl_decompose(oracle::random_curvature(5, rng)).part("weyl");
  const CurvatureDecomposition d = weyl_decompose(w);
  EXPECT_LT(d.part("ric0_part").tensor().max_abs(), 1e-12);
  EXPECT_LT(d.part("scalar_part").tensor().max_abs(), 1e-12);
  EXPECT_LT((d.part("weyl") - w).tensor().max_abs(), 1e-12);
}

TEST(Decomp, WeylRejectsLowDimension) {
  EXPECT_THROW(weyl_decompose(sphere(3)), DomainError);
}

TEST(Decomp, BochnerOfConstantHolomorphicVanishes) {
  for (int m = 2; m <= 4; ++m) {
    const BochnerResult b = bochner_decompose(const_hol(m, 7.0), EuclideanSpace::kaehler(m));
    EXPECT_LT(b.decomposition.part("bochner").tensor().max_abs(), 1e-12);
    EXPECT_LT(b.decomposition.part("ric0_part").tensor().max_abs(), 1e-12);
    EXPECT_LT(b.route_residual, 1e-10);
  }
}

TEST(Decomp, BochnerPartIsTotallyTraceFree) {
  std::mt19937_64 rng(33);
  for (int m = 2; m <= 4; ++m) {
    const auto space = cached_curvature_space(StructureKind::kaehler, m);
    const EuclideanSpace& e = space->algebra().space();
    for (int t = 0; t < 5; ++t) {
      const CurvatureTensor rm = space->sample(rng);
      const BochnerResult b = bochner_decompose(rm, e);
      expect_orthogonal_split(b.decomposition, rm);
      const TraceResiduals tr = total_traces(b.decomposition.part("bochner").tensor(), e);
      EXPECT_LT(tr.metric, 1e-10);
      EXPECT_LT(tr.complex, 1e-10);
      EXPECT_LT(b.route_residual, 1e-9);
      EXPECT_LT(kaehler_symmetry_residual(b.decomposition.part("bochner").tensor(), e.structure().j()), 1e-10);
    }
  }
}

TEST(Decomp, BochnerRejectsNonKaehlerInput) {
  std::mt19937_64 rng(34);
  EXPECT_THROW(bochner_decompose(oracle::random_curvature(4, rng), EuclideanSpace::kaehler(2)), SymmetryError);
  EXPECT_THROW(bochner_decompose(sphere(4), EuclideanSpace::generic(4)), StructureError);
}

TEST(Decomp, QuaternionicSplit) {
  for (int m = 2; m <= 3; ++m) {
    const EuclideanSpace e = EuclideanSpace::quaternion_kaehler(m);
    const CurvatureDecomposition d = qk_decompose(hp(m), e);
    EXPECT_LT(d.part("hyperkaehler_part").tensor().max_abs(), 1e-12);
    EXPECT_NEAR(d.coefficient("hp_multiple"), 1.0, 1e-12);
  }
  for (int m = 2; m <= 5; ++m) {
    const EuclideanSpace e = EuclideanSpace::quaternion_kaehler(m);
    const CurvatureTensor rw = wolf(m);
    const CurvatureDecomposition d = qk_decompose(rw, e);
    expect_orthogonal_split(d, rw);
    EXPECT_NEAR(d.coefficient("hp_multiple"), 4.0 * m * (m + 2) / (16.0 * m * (m + 2)), 1e-12);
    EXPECT_NEAR(d.part("hyperkaehler_part").norm_sq() / 4.0, 9.0 * m * (m - 1), 1e-9);
  }
  const CurvatureDecomposition w3 = qk_decompose(wolf(3), EuclideanSpace::quaternion_kaehler(3));
  EXPECT_NEAR(w3.coefficient("scal"), 60.0, 1e-10);
  EXPECT_NEAR(w3.coefficient("hp_multiple"), 0.25, 1e-12);
}

TEST(Decomp, QuaternionicRandomTensors) {
  std::mt19937_64 rng(35);
  const auto space = cached_curvature_space(StructureKind::quaternion_kaehler, 2);
  const EuclideanSpace& e = space->algebra().space();
  for (int t = 0; t < 10; ++t) {
    const CurvatureTensor rm = space->sample(rng);
    const CurvatureDecomposition d = qk_decompose(rm, e);
    expect_orthogonal_split(d, rm);
    EXPECT_NEAR(scalar(d.part("hyperkaehler_part")), 0.0, 1e-10);
    EXPECT_NEAR(d.part("hyperkaehler_part").dot(hp(2)), 0.0, 1e-9);
  }
}

TEST(Decomp, QuaternionicRejectsOffAlgebraMass) {
  EXPECT_THROW(qk_decompose(sphere(8), EuclideanSpace::quaternion_kaehler(2)), SymmetryError);
}

TEST(Decomp, DispatchAndLookup) {
  const CurvatureDecomposition d = decompose(sphere(5), EuclideanSpace::generic(5));
  EXPECT_EQ(d.kind, StructureKind::generic);
  EXPECT_THROW(d.part("bochner"), DomainError);
  EXPECT_THROW(d.coefficient("missing"), DomainError);
  EXPECT_EQ(decompose(const_hol_shape(2), EuclideanSpace::kaehler(2)).parts.back().name, "bochner");
}
