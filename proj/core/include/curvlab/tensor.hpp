#pragma once

// Dense covariant tensors on R^n, algebraic curvature tensors and their
// curvature operators, the Kulkarni-Nomizu product and the so(n) action.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "curvlab/euclid.hpp"

namespace curvlab {

/// Dense (0,k)-tensor in the fixed orthonormal basis, row-major: the last
/// index runs fastest.
class Tensor {
 public:
  Tensor(int rank, int dim);

  static Tensor from_matrix(const Matrix& m);

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& operator()(int i, int j) { return data_[idx(i, j)]; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }
  double& operator()(int i, int j, int k, int l) { return data_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return data_[idx(i, j, k, l)]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  /// Rank-2 tensors only: entry (i,j) of the returned matrix is T(e_i, e_j).
  Matrix as_matrix() const;

  double dot(const Tensor& other) const;
  double norm_sq() const;
  double max_abs() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(double s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }
  friend Tensor operator*(Tensor a, double s) { return a *= s; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }
  std::size_t idx(int i, int j, int k, int l) const {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
  }
  void require_same_shape(const Tensor& other) const;

  int rank_;
  int n_;
  std::vector<double> data_;
};

/// max |T(X,Y,Z,W) + T(Y,X,Z,W)|, |T(X,Y,Z,W) + T(X,Y,W,Z)|, |T(X,Y,Z,W) - T(Z,W,X,Y)|.
double curvature_symmetry_residual(const Tensor& t);
/// max |T(X,Y,Z,W) + T(Y,Z,X,W) + T(Z,X,Y,W)|.
double bianchi_residual(const Tensor& t);

/// Rank-4 tensor with the curvature symmetries and the first Bianchi identity.
class CurvatureTensor {
 public:
  /// Zero tensor on R^n.
  explicit CurvatureTensor(int n);
  /// Validates curvature symmetries and Bianchi against `tol * (1 + max|T|)`;
  /// throws SymmetryError with the offending residual.
  explicit CurvatureTensor(Tensor t, double tol = 1e-10);

  /// Skips validation; for tensors that are curvature tensors by construction.
  static CurvatureTensor unchecked(Tensor t);

  int dim() const noexcept { return t_.dim(); }
  const Tensor& tensor() const noexcept { return t_; }
  double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }

  /// Full component norm sum_{ijkl} Rm_{ijkl}^2 (equals 4 |R|^2).
  double norm_sq() const { return t_.norm_sq(); }
  double dot(const CurvatureTensor& o) const { return t_.dot(o.t_); }

  CurvatureTensor& operator+=(const CurvatureTensor& o);
  CurvatureTensor& operator-=(const CurvatureTensor& o);
  CurvatureTensor& operator*=(double s);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(double s, CurvatureTensor a) { return a *= s; }
  friend CurvatureTensor operator*(CurvatureTensor a, double s) { return a *= s; }

 private:
  struct Unchecked {};
  CurvatureTensor(Tensor t, Unchecked) : t_(std::move(t)) {}
  Tensor t_;
};

/// Symmetric matrix on the bivector space (size n(n-1)/2), or on the basis of
/// a holonomy algebra (size dim g).
class CurvatureOperator {
 public:
  explicit CurvatureOperator(Matrix m, double tol = 1e-12);

  const Matrix& matrix() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(m_.rows()); }
  /// Frobenius norm squared; for operators on the full bivector space this is |R|^2.
  double norm_sq() const { return m_.squaredNorm(); }
  SpectralData spectrum() const { return symmetric_eigen(m_); }

 private:
  Matrix m_;
};

/// (S o T)(X,Y,Z,W) = S(X,Z)T(Y,W) - S(X,W)T(Y,Z) + S(Y,W)T(X,Z) - S(Y,Z)T(X,W),
/// applied verbatim to any pair of rank-2 tensors.
Tensor kulkarni_nomizu(const Tensor& s, const Tensor& t);
/// Convenience for symmetric S, T, where the product is a curvature tensor.
CurvatureTensor kulkarni_nomizu_curvature(const Tensor& s, const Tensor& t);
/// (S (x) T)(X,Y,Z,W) = S(X,Y) T(Z,W).
Tensor outer(const Tensor& s, const Tensor& t);

/// Metric g as a rank-2 tensor.
Tensor metric_tensor(int n);

/// Matrix entries g(R(e_i ^ e_j), e_k ^ e_l) = Rm(e_i, e_j, e_k, e_l).
CurvatureOperator to_operator(const CurvatureTensor& rm);
/// Inverse of to_operator. Throws SymmetryError when the operator is not
/// symmetric or the resulting tensor violates the Bianchi identity.
CurvatureTensor from_operator(const CurvatureOperator& op, double tol = 1e-10);
/// Same as from_operator without the Bianchi check (pair-symmetric 4-tensor).
Tensor tensor_from_operator_matrix(const Matrix& op);

/// T(X_1, .., A X_slot, .., X_k) for any n x n matrix A.
Tensor pullback_slot(const Tensor& t, const Matrix& a, int slot);

/// (L T)(X_1..X_k) = - sum_i T(X_1, .., L X_i, .., X_k) for k in {2, 4}.
Tensor lie_action(const Bivector& l, const Tensor& t);
/// Same as lie_action with L given by its skew matrix.
Tensor lie_action(const Matrix& skew, const Tensor& t);

/// Ric(Y, W) = sum_i Rm(e_i, Y, e_i, W).
Tensor ricci(const Tensor& rm);
double scalar(const Tensor& rm);
inline Tensor ricci(const CurvatureTensor& rm) { return ricci(rm.tensor()); }
inline double scalar(const CurvatureTensor& rm) { return scalar(rm.tensor()); }

struct TraceResiduals {
  double metric = 0.0;   // max_{Y,W} |sum_i T(e_i, Y, e_i, W)|
  double complex = 0.0;  // max_{Z,W} |sum_i T(e_i, J e_i, Z, W)|; 0 without J
};
/// Contraction norms of a rank-4 tensor. The J-contraction is evaluated when
/// `space` carries a complex structure (for QK spaces, the J of the triple).
TraceResiduals total_traces(const Tensor& t, const EuclideanSpace& space);

/// Kaehler form omega(X,Y) = g(JX, Y) as a (skew) rank-2 tensor.
Tensor kaehler_form(const Matrix& j);
/// S_J(X, Y) = S(JX, Y), e.g. the Ricci form rho from Ric.
Tensor compose_with_complex(const Tensor& s, const Matrix& j);

/// Gaussian sample from the space of algebraic curvature tensors on R^n:
/// standard normal symmetric operator (orthonormal coordinates) followed by
/// the orthogonal Bianchi projection Rm - (1/3)(cyclic sum).
CurvatureTensor random_curvature_tensor(int n, std::mt19937_64& rng);
/// Orthogonal projection of a pair-symmetric 4-tensor onto the Bianchi kernel.
Tensor bianchi_project(const Tensor& t);

/// Standard normal symmetric matrix in orthonormal coordinates of Sym^2.
Matrix random_symmetric(int size, std::mt19937_64& rng);

}  // namespace curvlab
