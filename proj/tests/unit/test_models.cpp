#include <gtest/gtest.h>

#include "curvlab/curvlab.hpp"
#include "oracles.hpp"

using namespace curvlab;

TEST(Models, SphereRadius) {
  const CurvatureTensor rm = sphere(3, 2.0);
  EXPECT_NEAR(rm(0, 1, 0, 1), 0.25, 1e-15);
  EXPECT_NEAR(sphere(5)(0, 1, 0, 1), 2.0, 1e-15);
  EXPECT_THROW(sphere(3, -1.0), DomainError);
}

TEST(Models, ConstantHolomorphic) {
  for (int m = 1; m <= 4; ++m) {
    const CurvatureTensor rm = const_hol(m, 12.0);
    EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-13);
    EXPECT_NEAR(scalar(rm), 12.0, 1e-12);
    const Matrix j = HolonomyStructure::kaehler(m).j();
    EXPECT_LT(kaehler_symmetry_residual(rm.tensor(), j), 1e-13);
    // Holomorphic sectional curvature is constant: Rm(X, JX, X, JX) / |X|^4.
    const CurvatureTensor s = const_hol_shape(m);
    const double k0 = s(0, 1, 0, 1);
    if (m >= 2) EXPECT_NEAR(s(2, 3, 2, 3), k0, 1e-13);
  }
  EXPECT_GT(kaehler_symmetry_residual(sphere(4).tensor(), HolonomyStructure::kaehler(2).j()), 0.1);
}

TEST(Models, QuaternionicProjectiveSpace) {
  for (int m = 2; m <= 4; ++m) {
    const CurvatureTensor rm = hp(m);
    EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-12);
    const CurvatureOperator op = to_operator(rm);
    EXPECT_NEAR(op.norm_sq(), 16.0 * m * (5 * m + 1), 1e-9);
    EXPECT_NEAR(rm.norm_sq(), 4.0 * op.norm_sq(), 1e-9);
    EXPECT_NEAR(scalar(rm), 16.0 * m * (m + 2), 1e-10);
    const auto a = cached_algebra(StructureKind::quaternion_kaehler, m);
    EXPECT_LE(invariance_defect(rm, *a), 1e-9);
  }
}

TEST(Models, GrassmannianSmallCase) {
  const CurvatureTensor rm = grassmannian(2, 2);
  const Vector eig = oracle::reference_eigenvalues(to_operator(rm).matrix());
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig(i), 0.0, 1e-12);
  EXPECT_NEAR(eig(4), 2.0, 1e-12);
  EXPECT_NEAR(eig(5), 2.0, 1e-12);
  EXPECT_NEAR(scalar(rm), 8.0, 1e-12);
}

TEST(Models, GrassmannianSpectraAndScalar) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      if (p * q < 2) continue;
      const CurvatureTensor rm = grassmannian(p, q);
      EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-12);
      EXPECT_NEAR(scalar(rm), double(p) * q * (p + q - 2), 1e-10);
      const Vector eig = oracle::reference_eigenvalues(to_operator(rm).matrix());
      int np = 0, nq = 0, zero = 0;
      for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (std::abs(eig(i)) < 1e-9) ++zero;
        else if (std::abs(eig(i) - p) < 1e-9) ++np;
        else if (std::abs(eig(i) - q) < 1e-9) ++nq;
      }
      if (p == q) {
        EXPECT_EQ(np, q * (q - 1) / 2 + p * (p - 1) / 2);
      } else {
        EXPECT_EQ(np, q * (q - 1) / 2);
        EXPECT_EQ(nq, p * (p - 1) / 2);
      }
      EXPECT_EQ(zero + (p == q ? np : np + nq), eig.size());
    }
}

TEST(Models, WolfSpace) {
  for (int m = 2; m <= 5; ++m) {
    const CurvatureTensor rw = wolf(m);
    EXPECT_LT(oracle::symmetry_residual(rw.tensor()), 1e-12);
    const CurvatureOperator op = to_operator(rw);
    EXPECT_NEAR(op.norm_sq(), 2.0 * m * (7 * m - 4), 1e-9);
    EXPECT_NEAR(scalar(rw), 4.0 * m * (m + 2), 1e-10);
    EXPECT_NEAR(scalar(grassmannian(4, m)), 4.0 * m * (m + 2), 1e-10);
    const auto a = cached_algebra(StructureKind::quaternion_kaehler, m);
    EXPECT_LT(off_algebra_mass(op.matrix(), *a), 1e-10);
    EXPECT_GT(invariance_defect(rw, *a), 0.1);
  }
  EXPECT_THROW(wolf(1), DomainError);
}

TEST(Models, WolfIsIsometricToGrassmannian) {
  for (int m = 2; m <= 4; ++m) {
    const Vector a = oracle::reference_eigenvalues(to_operator(wolf(m)).matrix());
    const Vector b = oracle::reference_eigenvalues(to_operator(grassmannian(4, m)).matrix());
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}
