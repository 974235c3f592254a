#include "curvlab/models.hpp"

#include <cmath>

namespace curvlab {

CurvatureTensor sphere(int n, double radius) {
  if (n < 2) throw DomainError("sphere needs n >= 2");
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  const Tensor g = metric_tensor(n);
  return CurvatureTensor(kulkarni_nomizu(g, g) * (1.0 / (2.0 * radius * radius)));
}

CurvatureTensor const_hol_shape(int m) {
  if (m < 1) throw DomainError("const_hol needs m >= 1");
  const auto space = EuclideanSpace::kaehler(m);
  const Tensor g = metric_tensor(space.dim());
  const Tensor omega = kaehler_form(space.structure().j());
  Tensor t = 0.5 * kulkarni_nomizu(g, g);
  t += 0.5 * kulkarni_nomizu(omega, omega);
  t += 2.0 * outer(omega, omega);
  return CurvatureTensor(std::move(t));
}

CurvatureTensor const_hol(int m, double scal) {
  return const_hol_shape(m) * (scal / (4.0 * m * (m + 1)));
}

CurvatureTensor hp(int m) {
  const auto space = EuclideanSpace::quaternion_kaehler(m);
  const int n = space.dim();
  const int big_n = space.bivector_dim();
  const auto ijk = space.structure().ijk();
  std::vector<Vector> omegas;
  for (const Matrix& l : ijk) omegas.push_back(Bivector::from_skew(l).coeffs());
  Matrix op(big_n, big_n);
  for (int a = 0; a < big_n; ++a) {
    const auto [i, j] = pair_at(a, n);
    Vector col = Vector::Unit(big_n, a);
    for (const Matrix& l : ijk) col += wedge(l.col(i), l.col(j)).coeffs();
    for (const Vector& w : omegas) col += 2.0 * w(a) * w;
    op.col(a) = col;
  }
  return from_operator(CurvatureOperator(op, 1e-12));
}

CurvatureTensor grassmannian(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("grassmannian needs p, q >= 1");
  const int n = p * q;
  auto row = [p](int x) { return x / p; };
  auto col = [p](int x) { return x % p; };
  // tr(A^T B C^T D) for basis matrices.
  auto tau = [&](int a, int b, int c, int d) -> double {
    return (row(a) == row(b) && row(c) == row(d) && col(b) == col(c) && col(d) == col(a)) ? 1.0
                                                                                           : 0.0;
  };
  Tensor t(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          t(x, y, z, w) = -tau(z, y, x, w) - tau(x, y, z, w) + tau(z, x, y, w) + tau(y, x, z, w);
  return CurvatureTensor(std::move(t));
}

CurvatureTensor wolf(int m) {
  if (m < 2) throw DomainError("wolf needs m >= 2");
  const CurvatureTensor gr = grassmannian(m, 4);
  const int n = 4 * m;
  // Entry x_ij (row i of 4, column j of m) sits at index i*m + j and maps to e_{4j+i}.
  std::vector<int> to(n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < m; ++j) to[i * m + j] = 4 * j + i;
  Tensor t(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) t(to[x], to[y], to[z], to[w]) = gr(x, y, z, w);
  return CurvatureTensor(std::move(t));
}

double kaehler_symmetry_residual(const Tensor& rm, const Matrix& j) {
  if (rm.rank() != 4) throw DimensionError("kaehler_symmetry_residual: rank-4 tensor required");
  const Tensor rotated = pullback_slot(pullback_slot(rm, j, 0), j, 1);
  return (rotated - rm).max_abs();
}

}  // namespace curvlab
