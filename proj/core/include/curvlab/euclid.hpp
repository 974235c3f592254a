#pragma once

// Euclidean space V = R^n with its fixed orthonormal basis, the bivector
// space of 2-forms identified with so(V), and a dense symmetric eigensolver.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "curvlab/errors.hpp"

namespace curvlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class StructureKind { generic, kaehler, quaternion_kaehler };

const char* to_string(StructureKind kind);
StructureKind structure_kind_from_string(const std::string& name);

/// Complex or quaternionic structure maps, stored as n x n matrices acting on
/// column coordinate vectors.
///
/// Kaehler: J e_{2k} = e_{2k+1}, J e_{2k+1} = -e_{2k} (0-based).
/// Quaternion-Kaehler: each block (e_{4k}, e_{4k+1}, e_{4k+2}, e_{4k+3}) is
/// (f_k, I f_k, J f_k, K f_k), so IJ = -JI = K holds exactly.
class HolonomyStructure {
 public:
  static HolonomyStructure generic();
  static HolonomyStructure kaehler(int m);
  static HolonomyStructure quaternionic(int m);

  StructureKind kind() const noexcept { return kind_; }

  /// Complex structure; for quaternionic structures this is the J of the triple.
  const Matrix& j() const;
  const Matrix& i() const;
  const Matrix& k() const;
  /// (I, J, K) for quaternionic structures.
  std::array<Matrix, 3> ijk() const;

 private:
  HolonomyStructure(StructureKind kind, std::vector<Matrix> maps)
      : kind_(kind), maps_(std::move(maps)) {}

  StructureKind kind_ = StructureKind::generic;
  std::vector<Matrix> maps_;
};

class EuclideanSpace {
 public:
  static EuclideanSpace generic(int n);
  /// Real dimension 2m.
  static EuclideanSpace kaehler(int m);
  /// Real dimension 4m, m >= 2.
  static EuclideanSpace quaternion_kaehler(int m);
  /// Dispatch on kind; `size` is n for generic spaces and m otherwise.
  static EuclideanSpace make(StructureKind kind, int size);

  int dim() const noexcept { return n_; }
  int bivector_dim() const noexcept { return n_ * (n_ - 1) / 2; }
  /// m for Kaehler (n = 2m) and quaternion-Kaehler (n = 4m) spaces, n otherwise.
  int structure_size() const noexcept;
  StructureKind kind() const noexcept { return structure_.kind(); }
  const HolonomyStructure& structure() const noexcept { return structure_; }

  Vector basis_vector(int i) const;

  friend bool operator==(const EuclideanSpace& a, const EuclideanSpace& b) {
    return a.n_ == b.n_ && a.kind() == b.kind();
  }

 private:
  EuclideanSpace(int n, HolonomyStructure s) : n_(n), structure_(std::move(s)) {}

  int n_;
  HolonomyStructure structure_;
};

/// Lexicographic index of e_i ^ e_j (i < j) in the basis of the bivector space.
int pair_index(int i, int j, int n);
/// Inverse of pair_index.
std::pair<int, int> pair_at(int index, int n);

/// Element of the bivector space, stored in the orthonormal basis
/// {e_i ^ e_j : i < j} ordered lexicographically.
class Bivector {
 public:
  explicit Bivector(int n);
  Bivector(int n, Vector coeffs);

  static Bivector basis(int n, int i, int j);
  /// Bivector whose associated skew endomorphism is `a`.
  static Bivector from_skew(const Matrix& a, double tol = 1e-10);

  int dim() const noexcept { return n_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  Vector& coeffs() noexcept { return coeffs_; }

  /// Coefficient of e_i ^ e_j for any i, j (antisymmetric extension).
  double operator()(int i, int j) const;

  /// Matrix A with A z = (this) z, using (X ^ Y) Z = g(X,Z) Y - g(Y,Z) X.
  Matrix skew_matrix() const;

  double norm() const { return coeffs_.norm(); }
  double norm_sq() const { return coeffs_.squaredNorm(); }

  Bivector& operator+=(const Bivector& other);
  Bivector& operator-=(const Bivector& other);
  Bivector& operator*=(double s);

  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator*(double s, Bivector a) { return a *= s; }
  friend Bivector operator*(Bivector a, double s) { return a *= s; }

 private:
  int n_;
  Vector coeffs_;
};

Bivector wedge(const Vector& x, const Vector& y);
/// The skew endomorphism of V determined by xi, applied to z.
Vector apply(const Bivector& xi, const Vector& z);
/// Matrix commutator of the associated skew endomorphisms.
Bivector bracket(const Bivector& xi, const Bivector& eta);
double inner(const Bivector& xi, const Bivector& eta);

struct SpectralData {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // orthonormal columns, eigenvectors.col(i) <-> eigenvalues(i)
  int sweeps = 0;
};

struct JacobiOptions {
  double symmetry_tol = 1e-12;
  double convergence_tol = 1e-13;
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver. Deterministic for fixed input.
/// Throws SymmetryError for non-symmetric input and ConvergenceError when the
/// sweep cap is reached.
SpectralData symmetric_eigen(const Matrix& s, const JacobiOptions& options = {});

/// Eigenvalue clusters (value, multiplicity) of an ascending spectrum: a new
/// cluster starts wherever consecutive eigenvalues differ by more than `gap`.
struct EigenCluster {
  double value;
  int multiplicity;
};
std::vector<EigenCluster> cluster_spectrum(const Vector& ascending, double gap = 1e-6);

/// Orthonormal basis of the kernel of a symmetric positive semidefinite
/// normal matrix: eigenvectors whose eigenvalue is below threshold * max(1, lambda_max).
Matrix kernel_from_normal(const Matrix& normal, double threshold = 1e-8);

/// Modified Gram-Schmidt with a second re-orthogonalisation pass. Columns whose
/// residual norm falls below drop_tol are discarded.
Matrix gram_schmidt(const Matrix& columns, double drop_tol = 1e-8);

}  // namespace curvlab
