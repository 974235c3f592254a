#include "curvlab/curvature_space.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace curvlab {

Matrix symmetric_from_coordinates(const Vector& coords, int size) {
  if (coords.size() != size * (size + 1) / 2) throw DimensionError("Sym^2 coordinate count mismatch");
  const double off = 1.0 / std::sqrt(2.0);
  Matrix s(size, size);
  Eigen::Index idx = 0;
  for (int a = 0; a < size; ++a) {
    s(a, a) = coords(idx++);
    for (int b = a + 1; b < size; ++b) {
      s(a, b) = s(b, a) = off * coords(idx++);
    }
  }
  return s;
}

Matrix bianchi_constraint(const HolonomyAlgebra& algebra) {
  const int n = algebra.space().dim();
  const int d = algebra.dim();
  const Matrix& b = algebra.basis_matrix();
  const int rows = n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24;
  const int cols = d * (d + 1) / 2;
  Matrix c = Matrix::Zero(rows, cols);
  const double off = 1.0 / std::sqrt(2.0);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++row) {
          const int p[3] = {pair_index(i, j, n), pair_index(i, l, n), pair_index(i, k, n)};
          const int q[3] = {pair_index(k, l, n), pair_index(j, k, n), pair_index(j, l, n)};
          const double sign[3] = {1.0, 1.0, -1.0};
          int col = 0;
          for (int a = 0; a < d; ++a) {
            double v = 0.0;
            for (int t = 0; t < 3; ++t) v += sign[t] * b(p[t], a) * b(q[t], a);
            c(row, col++) = v;
            for (int e = a + 1; e < d; ++e) {
              double w = 0.0;
              for (int t = 0; t < 3; ++t)
                w += sign[t] * (b(p[t], a) * b(q[t], e) + b(p[t], e) * b(q[t], a));
              c(row, col++) = off * w;
            }
          }
        }
  return c;
}

CurvatureTensor tensor_from_restricted(const Matrix& restricted, const HolonomyAlgebra& algebra) {
  return CurvatureTensor::unchecked(tensor_from_operator_matrix(embed(restricted, algebra)));
}

CurvatureSpace::CurvatureSpace(std::shared_ptr<const HolonomyAlgebra> algebra)
    : algebra_(std::move(algebra)) {
  const int n = algebra_->space().dim();
  if (algebra_->kind() == StructureKind::generic) {
    dim_ = n * n * (n * n - 1) / 12;
    return;
  }
  const Matrix c = bianchi_constraint(*algebra_);
  // In orthonormal coordinates each Bianchi row has squared norm 3/2 on the
  // full bivector space; the scaling keeps the normal spectrum inside [0, 1].
  const Matrix normal = (2.0 / 3.0) * (c.transpose() * c);
  kernel_ = kernel_from_normal(normal);
  dim_ = static_cast<int>(kernel_.cols());
}

Matrix CurvatureSpace::restricted_from_coordinates(const Vector& coords) const {
  if (algebra_->kind() == StructureKind::generic)
    throw StructureError("so(n) curvature space has no stored kernel basis");
  if (coords.size() != dim_) throw DimensionError("kernel coordinate count mismatch");
  return symmetric_from_coordinates(kernel_ * coords, algebra_->dim());
}

Matrix CurvatureSpace::sample_restricted(std::mt19937_64& rng) const {
  if (algebra_->kind() == StructureKind::generic)
    return to_operator(random_curvature_tensor(algebra_->space().dim(), rng)).matrix();
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector z(dim_);
  for (int i = 0; i < dim_; ++i) z(i) = normal(rng);
  return restricted_from_coordinates(z);
}

CurvatureTensor CurvatureSpace::sample(std::mt19937_64& rng) const {
  if (algebra_->kind() == StructureKind::generic)
    return random_curvature_tensor(algebra_->space().dim(), rng);
  return tensor_from_restricted(sample_restricted(rng), *algebra_);
}

std::shared_ptr<const CurvatureSpace> cached_curvature_space(StructureKind kind, int size) {
  static std::shared_mutex mutex;
  static std::map<std::pair<StructureKind, int>, std::shared_ptr<const CurvatureSpace>> cache;
  const auto key = std::make_pair(kind, size);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const CurvatureSpace>(cached_algebra(kind, size));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

}  // namespace curvlab
