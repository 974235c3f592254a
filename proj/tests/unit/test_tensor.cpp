#include <gtest/gtest.h>

#include <random>

#include "curvlab/curvlab.hpp"
#include "oracles.hpp"

using namespace curvlab;

TEST(Tensor, KulkarniNomizuSphereInTwoDimensions) {
  const Tensor g = metric_tensor(2);
  const Tensor gg = kulkarni_nomizu(g, g);
  EXPECT_DOUBLE_EQ(gg(0, 1, 0, 1), 2.0);
  EXPECT_DOUBLE_EQ(kulkarni_nomizu(Tensor(2, 2), g).max_abs(), 0.0);
}

TEST(Tensor, KulkarniNomizuMatchesOracle) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 6; ++n) {
    const Tensor s = Tensor::from_matrix(oracle::random_symmetric(n, rng));
    const Tensor t = Tensor::from_matrix(oracle::random_symmetric(n, rng));
    const Tensor a = Tensor::from_matrix(oracle::random_matrix(n, n, rng));
    EXPECT_LT((kulkarni_nomizu(s, t) - oracle::kulkarni_nomizu(s, t)).max_abs(), 1e-13);
    EXPECT_LT((kulkarni_nomizu(s, t) - kulkarni_nomizu(t, s)).max_abs(), 1e-13);
    EXPECT_LT((kulkarni_nomizu(a, s) - oracle::kulkarni_nomizu(a, s)).max_abs(), 1e-13);
    EXPECT_LT(oracle::symmetry_residual(kulkarni_nomizu(s, t)), 1e-13);
    EXPECT_NO_THROW(kulkarni_nomizu_curvature(s, t));
  }
}

TEST(Tensor, MetricProductIsTwiceIdentity) {
  for (int n = 2; n <= 7; ++n) {
    const CurvatureOperator op = to_operator(kulkarni_nomizu_curvature(metric_tensor(n), metric_tensor(n)));
    const int d = n * (n - 1) / 2;
    EXPECT_LT((op.matrix() - 2.0 * Matrix::Identity(d, d)).norm(), 1e-14);
    EXPECT_LT((from_operator(CurvatureOperator(2.0 * Matrix::Identity(d, d))) -
               kulkarni_nomizu_curvature(metric_tensor(n), metric_tensor(n)))
                  .tensor()
                  .max_abs(),
              1e-14);
  }
}

TEST(Tensor, OperatorRoundTripAndNormConvention) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const CurvatureTensor rm = oracle::random_curvature(n, rng);
    const CurvatureOperator op = to_operator(rm);
    EXPECT_LT((op.matrix() - oracle::operator_matrix(rm.tensor())).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((from_operator(op) - rm).tensor().max_abs(), 1e-12);
    EXPECT_NEAR(rm.norm_sq(), 4.0 * op.norm_sq(), 1e-10 * rm.norm_sq());
  }
}

TEST(Tensor, ValidationRejectsBrokenSymmetries) {
  Tensor t(4, 3);
  t(0, 1, 0, 1) = 1.0;
  EXPECT_THROW(CurvatureTensor{t}, SymmetryError);
  Tensor b(4, 4);
  // Pair-symmetric but violating Bianchi.
  for (auto [x, y, z, w, s] : {std::tuple{0, 1, 2, 3, 1}, {1, 0, 2, 3, -1}, {0, 1, 3, 2, -1},
                               {1, 0, 3, 2, 1}, {2, 3, 0, 1, 1}, {3, 2, 0, 1, -1},
                               {2, 3, 1, 0, -1}, {3, 2, 1, 0, 1}})
    b(x, y, z, w) = s;
  EXPECT_NEAR(curvature_symmetry_residual(b), 0.0, 1e-15);
  EXPECT_GT(bianchi_residual(b), 0.5);
  try {
    CurvatureTensor bad(b);
    FAIL();
  } catch (const SymmetryError& e) {
    EXPECT_GT(e.residual(), 0.5);
  }
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 1) = 1.0;
  EXPECT_THROW(CurvatureOperator{asym}, SymmetryError);
}

TEST(Tensor, RandomCurvatureTensorsAreValid) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 8; ++n) {
    const CurvatureTensor rm = random_curvature_tensor(n, rng);
    EXPECT_LT(oracle::symmetry_residual(rm.tensor()), 1e-12);
    EXPECT_GT(rm.norm_sq(), 0.0);
  }
}

TEST(Tensor, BianchiProjectionIsIdempotent) {
  std::mt19937_64 rng(4);
  const int n = 5;
  const Tensor t = tensor_from_operator_matrix(oracle::random_symmetric(10, rng));
  const Tensor p = bianchi_project(t);
  EXPECT_LT(bianchi_residual(p), 1e-13);
  EXPECT_LT((bianchi_project(p) - p).max_abs(), 1e-13);
  EXPECT_LT((p - oracle::curvature_from_symmetric(oracle::operator_matrix(t), n)).max_abs(), 1e-13);
  EXPECT_NEAR((t - p).dot(p), 0.0, 1e-10);
}

TEST(Tensor, LieActionOnMetricVanishes) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    const Bivector l(n, oracle::random_vector(n * (n - 1) / 2, rng));
    EXPECT_LT(lie_action(l, metric_tensor(n)).max_abs(), 1e-14);
    EXPECT_LT(lie_action(l, sphere(n).tensor()).max_abs(), 1e-13);
  }
}

TEST(Tensor, LieActionRankTwoExample) {
  Tensor t(2, 2);
  t(0, 0) = 1.0;
  const Tensor r = lie_action(Bivector::basis(2, 0, 1), t);
  EXPECT_DOUBLE_EQ(r(0, 0), 0.0);
  // L e_0 = e_1 and L e_1 = -e_0, so (LT)(e_0, e_1) = -T(e_1, e_1) - T(e_0, -e_0) = 1.
  EXPECT_DOUBLE_EQ(r(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(r(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(r(1, 1), 0.0);
}

TEST(Tensor, LieActionMatchesOracle) {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 6; ++n) {
    const Bivector l(n, oracle::random_vector(n * (n - 1) / 2, rng));
    const CurvatureTensor rm = oracle::random_curvature(n, rng);
    const Tensor s = Tensor::from_matrix(oracle::random_matrix(n, n, rng));
    EXPECT_LT((lie_action(l, rm.tensor()) - oracle::lie_action(l.skew_matrix(), rm.tensor())).max_abs(), 1e-12);
    EXPECT_LT((lie_action(l, s) - oracle::lie_action(l.skew_matrix(), s)).max_abs(), 1e-12);
    const Matrix a = oracle::random_matrix(n, n, rng);
    for (int slot = 0; slot < 4; ++slot) {
      const Tensor p = pullback_slot(rm.tensor(), a, slot);
      double err = 0.0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (int w = 0; w < n; ++w) {
              int idx[4] = {x, y, z, w};
              double s2 = 0.0;
              for (int v = 0; v < n; ++v) {
                int j[4] = {x, y, z, w};
                j[slot] = v;
                s2 += a(v, idx[slot]) * rm(j[0], j[1], j[2], j[3]);
              }
              err = std::max(err, std::abs(p(x, y, z, w) - s2));
            }
      EXPECT_LT(err, 1e-12);
    }
  }
}

TEST(Tensor, LieActionIsRepresentation) {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 6; ++n) {
    const int d = n * (n - 1) / 2;
    const Bivector l(n, oracle::random_vector(d, rng)), m(n, oracle::random_vector(d, rng));
    const Tensor t = oracle::random_curvature(n, rng).tensor();
    const Tensor lhs = lie_action(bracket(l, m), t);
    const Tensor rhs = lie_action(l, lie_action(m, t)) - lie_action(m, lie_action(l, t));
    EXPECT_LT((lhs - rhs).max_abs(), 1e-9);
  }
}

TEST(Tensor, LieActionRejectsRankThree) {
  EXPECT_THROW(lie_action(Bivector::basis(3, 0, 1), Tensor(3, 3)), DimensionError);
}

TEST(Tensor, RicciAndScalarOfSphere) {
  for (int n = 2; n <= 7; ++n) {
    const CurvatureTensor rm = kulkarni_nomizu_curvature(metric_tensor(n), metric_tensor(n));
    EXPECT_LT((ricci(rm) - 2.0 * (n - 1) * metric_tensor(n)).max_abs(), 1e-13);
    EXPECT_NEAR(scalar(rm), 2.0 * n * (n - 1), 1e-12);
  }
}

TEST(Tensor, RicciMatchesOracle) {
  std::mt19937_64 rng(10);
  const CurvatureTensor rm = oracle::random_curvature(6, rng);
  EXPECT_LT((ricci(rm) - oracle::ricci(rm.tensor())).max_abs(), 1e-13);
  EXPECT_NEAR(scalar(rm), oracle::scalar(rm.tensor()), 1e-12);
}

TEST(Tensor, TotalTracesOfSphereAndKaehlerForms) {
  const EuclideanSpace space = EuclideanSpace::kaehler(2);
  const CurvatureTensor rm = sphere(4);
  const TraceResiduals t = total_traces(rm.tensor(), space);
  EXPECT_NEAR(t.metric, 6.0, 1e-13);
  EXPECT_NEAR(t.complex, 4.0, 1e-13);
  const Matrix& j = space.structure().j();
  const Tensor omega = kaehler_form(j);
  // omega(X, Y) = g(JX, Y): omega(e_0, e_1) = 1.
  EXPECT_DOUBLE_EQ(omega(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(omega(1, 0), -1.0);
  const Tensor s = compose_with_complex(metric_tensor(4), j);
  EXPECT_LT((s - omega).max_abs(), 1e-15);
  EXPECT_GT(total_traces(outer(omega, omega), space).complex, 1.0);
}
