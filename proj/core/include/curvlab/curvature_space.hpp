#pragma once

// The space of algebraic curvature tensors whose operator is supported on a
// holonomy algebra, with seeded Gaussian sampling.

#include <memory>
#include <random>

#include "curvlab/holonomy.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

/// Symmetric operators S on the algebra such that B S B^T satisfies the first
/// Bianchi identity. For so(n) the Bianchi projector is applied in closed
/// form; otherwise the constraint kernel is computed once on construction.
class CurvatureSpace {
 public:
  explicit CurvatureSpace(std::shared_ptr<const HolonomyAlgebra> algebra);

  const HolonomyAlgebra& algebra() const noexcept { return *algebra_; }
  std::shared_ptr<const HolonomyAlgebra> algebra_ptr() const noexcept { return algebra_; }
  /// Dimension of the space.
  int dim() const noexcept { return dim_; }
  /// Orthonormal kernel basis in orthonormal Sym^2 coordinates; empty for so(n).
  const Matrix& kernel_basis() const noexcept { return kernel_; }

  /// Restricted operator (size dim g) assembled from kernel coordinates.
  Matrix restricted_from_coordinates(const Vector& coords) const;

  /// Standard Gaussian sample; returned as a restricted operator on the algebra.
  Matrix sample_restricted(std::mt19937_64& rng) const;
  /// Standard Gaussian sample as a curvature tensor.
  CurvatureTensor sample(std::mt19937_64& rng) const;

 private:
  std::shared_ptr<const HolonomyAlgebra> algebra_;
  int dim_ = 0;
  Matrix kernel_;
};

/// Symmetric matrix from orthonormal Sym^2 coordinates (a <= b, row-major);
/// off-diagonal coordinates enter as c / sqrt(2).
Matrix symmetric_from_coordinates(const Vector& coords, int size);

/// Rows: Bianchi components R(ij,kl) + R(il,jk) - R(ik,jl), i<j<k<l, of
/// B S B^T, as a linear map of the Sym^2 coordinates of S.
Matrix bianchi_constraint(const HolonomyAlgebra& algebra);

/// Curvature tensor with operator B S B^T, where S is restricted to the algebra.
CurvatureTensor tensor_from_restricted(const Matrix& restricted, const HolonomyAlgebra& algebra);

/// Shared instance per (kind, size).
std::shared_ptr<const CurvatureSpace> cached_curvature_space(StructureKind kind, int size);

}  // namespace curvlab
