#include <gtest/gtest.h>

#include <random>

#include "curvlab/curvlab.hpp"
#include "oracles.hpp"

using namespace curvlab;

namespace {

void expect_algebra_invariants(const HolonomyAlgebra& a) {
  const int d = a.dim();
  const Matrix& b = a.basis_matrix();
  EXPECT_LT((b.transpose() * b - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(a.closure_residual(), 1e-9);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      const Bivector br = bracket(a.element(x), a.element(y));
      Vector fit = Vector::Zero(br.coeffs().size());
      for (int z = 0; z < d; ++z) {
        EXPECT_NEAR(a.structure_constant(x, y, z), inner(br, a.element(z)), 1e-12);
        fit += a.structure_constant(x, y, z) * b.col(z);
      }
      EXPECT_LT((br.coeffs() - fit).norm(), 1e-9);
      for (int z = 0; z < d; ++z) {
        const double c = a.structure_constant(x, y, z);
        EXPECT_NEAR(c * c, std::pow(a.structure_constant(y, z, x), 2), 1e-10);
        EXPECT_NEAR(c * c, std::pow(a.structure_constant(z, y, x), 2), 1e-10);
      }
    }
}

std::vector<Matrix> skew_basis(const HolonomyAlgebra& a) {
  std::vector<Matrix> out;
  for (int x = 0; x < a.dim(); ++x) out.push_back(oracle::skew(a.basis_matrix().col(x), a.space().dim()));
  return out;
}

}  // namespace

TEST(Holonomy, SoDimensions) {
  EXPECT_EQ(so_algebra(EuclideanSpace::generic(2)).dim(), 1);
  EXPECT_EQ(so_algebra(EuclideanSpace::generic(8)).dim(), 28);
  const HolonomyAlgebra so3 = so_algebra(EuclideanSpace::generic(3));
  EXPECT_EQ(so3.dim(), 3);
  expect_algebra_invariants(so3);
  EXPECT_NEAR(std::abs(so3.structure_constant(0, 1, 2)), 1.0, 1e-14);
  const HolonomyAlgebra so2 = so_algebra(EuclideanSpace::generic(2));
  EXPECT_DOUBLE_EQ(so2.structure_constant(0, 0, 0), 0.0);
}

TEST(Holonomy, SoInvariantsUpToTwelve) {
  for (int n : {4, 6, 9, 12}) {
    const auto a = cached_algebra(StructureKind::generic, n);
    EXPECT_EQ(a->dim(), n * (n - 1) / 2);
    if (n <= 6) expect_algebra_invariants(*a);
    else EXPECT_LE(a->closure_residual(), 1e-9);
  }
}

TEST(Holonomy, UnitaryAlgebra) {
  const HolonomyAlgebra u1 = u_algebra(EuclideanSpace::kaehler(1));
  ASSERT_EQ(u1.dim(), 1);
  EXPECT_NEAR(std::abs(u1.basis_matrix()(0, 0)), 1.0, 1e-14);
  for (int m = 2; m <= 4; ++m) {
    const auto a = cached_algebra(StructureKind::kaehler, m);
    EXPECT_EQ(a->dim(), m * m);
    expect_algebra_invariants(*a);
    const Matrix& j = a->space().structure().j();
    for (int x = 0; x < a->dim(); ++x) EXPECT_LT((a->skew_matrix(x) * j - j * a->skew_matrix(x)).norm(), 1e-12);
  }
  EXPECT_THROW(u_algebra(EuclideanSpace::generic(4)), StructureError);
}

TEST(Holonomy, QuaternionicAlgebra) {
  for (int m = 2; m <= 4; ++m) {
    const auto a = cached_algebra(StructureKind::quaternion_kaehler, m);
    EXPECT_EQ(a->dim(), m * (2 * m + 1) + 3);
    ASSERT_EQ(a->summands().size(), 2u);
    const int dsp = m * (2 * m + 1);
    EXPECT_EQ(a->summands()[0], dsp);
    EXPECT_EQ(a->summands()[1], 3);
    if (m <= 3) expect_algebra_invariants(*a);
    for (int x = 0; x < dsp; ++x)
      for (int y = dsp; y < a->dim(); ++y) EXPECT_LT(bracket(a->element(x), a->element(y)).norm(), 1e-10);
    const auto ijk = a->space().structure().ijk();
    for (int x = 0; x < dsp; ++x)
      for (const Matrix& q : ijk) EXPECT_LT((a->skew_matrix(x) * q - q * a->skew_matrix(x)).norm(), 1e-12);
  }
  EXPECT_THROW(sp_sp1_algebra(EuclideanSpace::kaehler(4)), StructureError);
}

TEST(Holonomy, ExplicitFrameSpansSp) {
  for (int m = 2; m <= 4; ++m) {
    const auto a = cached_algebra(StructureKind::quaternion_kaehler, m);
    const QuaternionFrame f(a->space());
    const Matrix list = f.sp_list();
    const int dsp = m * (2 * m + 1);
    ASSERT_EQ(list.cols(), dsp);
    Eigen::FullPivLU<Matrix> lu(list);
    lu.setThreshold(1e-8);
    EXPECT_EQ(lu.rank(), dsp);
    Matrix stacked(list.rows(), 2 * dsp);
    stacked << list, a->basis_matrix().leftCols(dsp);
    Eigen::FullPivLU<Matrix> lu2(stacked);
    lu2.setThreshold(1e-8);
    EXPECT_EQ(lu2.rank(), dsp);
  }
}

TEST(Holonomy, FrameNormsAndDuality) {
  std::mt19937_64 rng(12);
  for (int m = 2; m <= 3; ++m) {
    const EuclideanSpace space = EuclideanSpace::quaternion_kaehler(m);
    const QuaternionFrame f(space);
    const auto ijk = space.structure().ijk();
    const int n = 4 * m;
    for (int l = 0; l < 3; ++l) {
      EXPECT_NEAR(f.omega(l).norm(), std::sqrt(2.0 * m), 1e-14);
      EXPECT_NEAR(f.omega_plus(l).norm(), 1.0, 1e-14);
      EXPECT_NEAR(f.omega_minus(l).norm(), 1.0, 1e-14);
      const Vector x = oracle::random_vector(n, rng), y = oracle::random_vector(n, rng);
      EXPECT_NEAR((ijk[l] * x).dot(y), inner(wedge(x, y), f.omega(l)), 1e-12);
      for (int i = 0; i < m; ++i) EXPECT_NEAR(f.single(l, i).norm(), 1.0, 1e-14);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) EXPECT_NEAR(f.pair(l, i, j).norm(), 1.0, 1e-14);
      for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j)
          EXPECT_NEAR(inner(f.tilde(l, i), f.tilde(l, j)), i == j ? 1.0 : 0.0, 1e-14);
    }
    EXPECT_NEAR(f.w(0, 1).norm(), 1.0, 1e-14);
  }
  EXPECT_THROW(QuaternionFrame(EuclideanSpace::quaternion_kaehler(2)).w(1, 1), DimensionError);
  EXPECT_THROW(QuaternionFrame(EuclideanSpace::kaehler(4)), StructureError);
}

TEST(Holonomy, ProjectExamples) {
  const auto so = cached_algebra(StructureKind::generic, 5);
  const CurvatureOperator two(2.0 * Matrix::Identity(10, 10));
  EXPECT_LT((project(two, *so).matrix() - two.matrix()).norm(), 1e-14);
  for (int m = 2; m <= 4; ++m) {
    const auto a = cached_algebra(StructureKind::quaternion_kaehler, m);
    const CurvatureOperator op = to_operator(hp(m));
    EXPECT_LT(off_algebra_mass(op.matrix(), *a), 1e-10);
    const Vector eig = project(op, *a).spectrum().eigenvalues;
    const int dsp = m * (2 * m + 1);
    for (int i = 0; i < dsp; ++i) EXPECT_NEAR(eig(i), 4.0, 1e-10);
    for (int i = dsp; i < dsp + 3; ++i) EXPECT_NEAR(eig(i), 4.0 * m, 1e-10);
    EXPECT_LT((embed(project(op, *a).matrix(), *a) - op.matrix()).norm(), 1e-10);
  }
  const auto u = cached_algebra(StructureKind::kaehler, 2);
  EXPECT_GT(off_algebra_mass(to_operator(sphere(4)).matrix(), *u), 1.0);
}

TEST(Holonomy, THatMatchesDefinitionAndOracle) {
  std::mt19937_64 rng(13);
  for (StructureKind kind : {StructureKind::generic, StructureKind::kaehler, StructureKind::quaternion_kaehler}) {
    const int size = kind == StructureKind::generic ? 5 : 2;
    const auto a = cached_algebra(kind, size);
    const int n = a->space().dim();
    const Tensor t = oracle::random_curvature(n, rng).tensor();
    const std::vector<Tensor> comps = t_hat(t, *a);
    ASSERT_EQ(static_cast<int>(comps.size()), a->dim());
    double sum = 0.0;
    for (int x = 0; x < a->dim(); ++x) {
      EXPECT_LT((comps[x] - oracle::lie_action(a->skew_matrix(x), t)).max_abs(), 1e-11);
      sum += comps[x].norm_sq();
    }
    const double direct = oracle::hat_norm_sq(t, skew_basis(*a));
    EXPECT_NEAR(hat_norm_sq(t, *a), sum, 1e-10 * sum);
    EXPECT_NEAR(hat_norm_sq(t, *a), direct, 1e-10 * direct);
    // g(L, T^g) = (L T) for L in the algebra.
    const Vector coords = oracle::random_vector(a->dim(), rng);
    Tensor lt(4, n), pairing(4, n);
    for (int x = 0; x < a->dim(); ++x) {
      pairing += coords(x) * comps[x];
      lt += coords(x) * oracle::lie_action(a->skew_matrix(x), t);
    }
    EXPECT_LT((pairing - lt).max_abs(), 1e-11);
  }
}

TEST(Holonomy, THatOfInvariantTensorsVanishes) {
  const auto so = cached_algebra(StructureKind::generic, 5);
  for (const Tensor& c : t_hat(sphere(5).tensor(), *so)) EXPECT_LT(c.max_abs(), 1e-13);
  const auto qk = cached_algebra(StructureKind::quaternion_kaehler, 2);
  EXPECT_LT(hat_norm_sq(hp(2).tensor(), *qk), 1e-18);
}

TEST(Holonomy, OperatorConventionHatNorm) {
  std::mt19937_64 rng(14);
  const auto a = cached_algebra(StructureKind::kaehler, 2);
  const auto space = cached_curvature_space(StructureKind::kaehler, 2);
  const CurvatureTensor rm = space->sample(rng);
  const double v = hat_norm_sq_operator(rm, *a);
  EXPECT_NEAR(v, hat_norm_sq(rm.tensor(), *a) / 4.0, 1e-10 * v);
}

TEST(Holonomy, CachedAlgebraIsShared) {
  EXPECT_EQ(cached_algebra(StructureKind::kaehler, 3).get(), cached_algebra(StructureKind::kaehler, 3).get());
}
