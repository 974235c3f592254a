#pragma once

// Holonomy algebras as orthonormal bivector bases inside so(n), their
// structure constants, the induced action on curvature operators, and the
// explicit quaternionic frame used for quaternion-Kaehler spaces.

#include <array>
#include <memory>
#include <vector>

#include "curvlab/euclid.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

class HolonomyAlgebra {
 public:
  /// `basis` holds coefficient vectors (columns) in the bivector basis of
  /// `space`. `summands` lists the dimensions of the direct summands in basis
  /// order. Throws DimensionError if the columns are not orthonormal to `tol`.
  HolonomyAlgebra(EuclideanSpace space, StructureKind kind, Matrix basis,
                  std::vector<int> summands, double tol = 1e-10);

  const EuclideanSpace& space() const noexcept { return space_; }
  /// generic -> so(n), kaehler -> u(m), quaternion_kaehler -> sp(m) + sp(1).
  StructureKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return static_cast<int>(basis_.cols()); }
  const Matrix& basis_matrix() const noexcept { return basis_; }
  Bivector element(int a) const;
  const Matrix& skew_matrix(int a) const { return skew_.at(static_cast<std::size_t>(a)); }
  /// derivation_matrix of element a.
  const Matrix& derivation(int a) const { return derivation_.at(static_cast<std::size_t>(a)); }
  const std::vector<int>& summands() const noexcept { return summands_; }

  /// c(a, b, c) = g([X_a, X_b], X_c).
  double structure_constant(int a, int b, int c) const {
    const auto d = static_cast<std::size_t>(dim());
    return c_[(static_cast<std::size_t>(a) * d + b) * d + c];
  }
  /// max_{a,b} |[X_a, X_b] - sum_c c(a,b,c) X_c|.
  double closure_residual() const noexcept { return closure_; }

  /// Coordinates of a bivector in this basis (orthogonal projection).
  Vector coordinates(const Bivector& xi) const;

 private:
  EuclideanSpace space_;
  StructureKind kind_;
  Matrix basis_;
  std::vector<int> summands_;
  std::vector<Matrix> skew_;
  std::vector<Matrix> derivation_;
  std::vector<double> c_;
  double closure_ = 0.0;
};

HolonomyAlgebra so_algebra(const EuclideanSpace& space);
/// Commutant of J in so(2m). Throws StructureError without a Kaehler structure.
HolonomyAlgebra u_algebra(const EuclideanSpace& space);
/// Common commutant of I, J, K, followed by omega_I, omega_J, omega_K normalised.
HolonomyAlgebra sp_sp1_algebra(const EuclideanSpace& space);
/// Dispatch on the structure of `space`.
HolonomyAlgebra holonomy_algebra(const EuclideanSpace& space);
/// Shared instance per (kind, size); construction runs once per key.
std::shared_ptr<const HolonomyAlgebra> cached_algebra(StructureKind kind, int size);

/// Orthonormal basis (columns, bivector coordinates) of the joint kernel of
/// A -> [A, S] for the given matrices S. Ordered by Gram-Schmidt applied to
/// the projections of e_1, e_2, ... so the result is reproducible.
Matrix commutant_basis(int n, const std::vector<Matrix>& maps);

/// Matrix D_L on the bivector space with (L . Rm) operator = D_L R + R D_L^T.
Matrix derivation_matrix(const Matrix& skew);
/// Operator of L . Rm given the operator R of Rm.
Matrix lie_action_operator(const Matrix& derivation, const Matrix& op);

/// g(R(X_a), X_b) for an operator on the full bivector space.
CurvatureOperator project(const CurvatureOperator& op, const HolonomyAlgebra& algebra);
/// Inverse of project for operators supported on the algebra: B R_hol B^T.
Matrix embed(const Matrix& restricted, const HolonomyAlgebra& algebra);
/// Frobenius norm of the part of `op` not of the form B S B^T.
double off_algebra_mass(const Matrix& op, const HolonomyAlgebra& algebra);

/// Components X_a T of the lifted tensor T^g.
std::vector<Tensor> t_hat(const Tensor& t, const HolonomyAlgebra& algebra);
/// sum_a |X_a T|^2 with the full component norm.
double hat_norm_sq(const Tensor& t, const HolonomyAlgebra& algebra);
/// sum_a |X_a R|^2 with the operator (Frobenius) norm, i.e. hat_norm_sq / 4.
double hat_norm_sq_operator(const CurvatureTensor& rm, const HolonomyAlgebra& algebra);

/// Named bivectors of the quaternionic frame on R^{4m}. Block vectors are
/// f_k = e_{4k}; L = 0, 1, 2 selects I, J, K. Indices are 0-based.
class QuaternionFrame {
 public:
  explicit QuaternionFrame(const EuclideanSpace& space);

  int m() const noexcept { return m_; }
  /// Kaehler forms; |omega_L| = sqrt(2m), skew matrix equal to L.
  const Bivector& omega(int l) const { return omega_.at(l); }
  const Bivector& omega_plus(int l) const { return plus_.at(l); }
  const Bivector& omega_minus(int l) const { return minus_.at(l); }
  /// W_ij for i < j.
  const Bivector& w(int i, int j) const;
  /// I_ij, J_ij, K_ij for i < j.
  const Bivector& pair(int l, int i, int j) const;
  /// I_i, J_i, K_i.
  const Bivector& single(int l, int i) const;
  /// Tilde combinations of the singles, i = 0..m-2.
  const Bivector& tilde(int l, int i) const;

  /// Columns W_ij, I_ij, J_ij, K_ij, I_i, J_i, K_i: the eigenvalue-4 space of HP^m.
  Matrix sp_list() const;
  /// Columns omega^+_L, omega^-_L, W_ij, L_ij, tilde L_i.
  Matrix wolf_eigenbasis() const;

 private:
  int pair_slot(int i, int j) const;

  int m_;
  std::vector<Bivector> omega_, plus_, minus_;
  std::vector<Bivector> w_;
  std::array<std::vector<Bivector>, 3> pairs_, singles_, tildes_;
};

}  // namespace curvlab
