#include "curvlab/euclid.hpp"

#include <cmath>
#include <string>

namespace curvlab {

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::generic:
      return "generic";
    case StructureKind::kaehler:
      return "kaehler";
    case StructureKind::quaternion_kaehler:
      return "qk";
  }
  return "generic";
}

StructureKind structure_kind_from_string(const std::string& name) {
  if (name == "generic" || name == "so") return StructureKind::generic;
  if (name == "kaehler" || name == "u") return StructureKind::kaehler;
  if (name == "qk" || name == "sp") return StructureKind::quaternion_kaehler;
  throw DomainError("unknown structure '" + name + "' (expected generic|kaehler|qk)");
}

HolonomyStructure HolonomyStructure::generic() { return {StructureKind::generic, {}}; }

HolonomyStructure HolonomyStructure::kaehler(int m) {
  if (m < 1) throw DomainError("Kaehler structure needs m >= 1");
  const int n = 2 * m;
  Matrix j = Matrix::Zero(n, n);
  for (int k = 0; k < m; ++k) {
    j(2 * k + 1, 2 * k) = 1.0;
    j(2 * k, 2 * k + 1) = -1.0;
  }
  return {StructureKind::kaehler, {j}};
}

HolonomyStructure HolonomyStructure::quaternionic(int m) {
  if (m < 2) throw DomainError("quaternion-Kaehler structure needs m >= 2");
  const int n = 4 * m;
  Matrix i = Matrix::Zero(n, n), j = Matrix::Zero(n, n), k = Matrix::Zero(n, n);
  // map(dst, src) = sign means  L e_src = sign * e_dst.
  for (int b = 0; b < m; ++b) {
    const int f = 4 * b, fi = f + 1, fj = f + 2, fk = f + 3;
    i(fi, f) = 1;  i(f, fi) = -1;  i(fk, fj) = 1;  i(fj, fk) = -1;
    j(fj, f) = 1;  j(fk, fi) = -1; j(f, fj) = -1;  j(fi, fk) = 1;
    k(fk, f) = 1;  k(fj, fi) = 1;  k(fi, fj) = -1; k(f, fk) = -1;
  }
  return {StructureKind::quaternion_kaehler, {i, j, k}};
}

const Matrix& HolonomyStructure::j() const {
  if (kind_ == StructureKind::generic) throw StructureError("space carries no complex structure");
  return kind_ == StructureKind::kaehler ? maps_[0] : maps_[1];
}

const Matrix& HolonomyStructure::i() const {
  if (kind_ != StructureKind::quaternion_kaehler)
    throw StructureError("space carries no quaternionic structure");
  return maps_[0];
}

const Matrix& HolonomyStructure::k() const {
  if (kind_ != StructureKind::quaternion_kaehler)
    throw StructureError("space carries no quaternionic structure");
  return maps_[2];
}

std::array<Matrix, 3> HolonomyStructure::ijk() const { return {i(), j(), k()}; }

EuclideanSpace EuclideanSpace::generic(int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  return {n, HolonomyStructure::generic()};
}

EuclideanSpace EuclideanSpace::kaehler(int m) { return {2 * m, HolonomyStructure::kaehler(m)}; }

EuclideanSpace EuclideanSpace::quaternion_kaehler(int m) {
  return {4 * m, HolonomyStructure::quaternionic(m)};
}

EuclideanSpace EuclideanSpace::make(StructureKind kind, int size) {
  switch (kind) {
    case StructureKind::generic:
      return generic(size);
    case StructureKind::kaehler:
      return kaehler(size);
    case StructureKind::quaternion_kaehler:
      return quaternion_kaehler(size);
  }
  return generic(size);
}

int EuclideanSpace::structure_size() const noexcept {
  switch (kind()) {
    case StructureKind::kaehler:
      return n_ / 2;
    case StructureKind::quaternion_kaehler:
      return n_ / 4;
    default:
      return n_;
  }
}

Vector EuclideanSpace::basis_vector(int i) const {
  if (i < 0 || i >= n_) throw DimensionError("basis index out of range");
  return Vector::Unit(n_, i);
}

int pair_index(int i, int j, int n) {
  if (i < 0 || j >= n || i >= j) throw DimensionError("pair_index needs 0 <= i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_at(int index, int n) {
  int i = 0;
  int row = n - 1;
  while (index >= row) {
    index -= row;
    ++i;
    --row;
    if (row <= 0) throw DimensionError("pair index out of range");
  }
  return {i, i + 1 + index};
}

Bivector::Bivector(int n) : n_(n), coeffs_(Vector::Zero(n * (n - 1) / 2)) {}

Bivector::Bivector(int n, Vector coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != n * (n - 1) / 2) throw DimensionError("bivector coefficient count mismatch");
}

Bivector Bivector::basis(int n, int i, int j) {
  Bivector b(n);
  if (i < j) {
    b.coeffs_(pair_index(i, j, n)) = 1.0;
  } else if (j < i) {
    b.coeffs_(pair_index(j, i, n)) = -1.0;
  }
  return b;
}

Bivector Bivector::from_skew(const Matrix& a, double tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw DimensionError("skew matrix must be square");
  const double asym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * (1.0 + a.cwiseAbs().maxCoeff())) throw SymmetryError("matrix is not skew", asym);
  Bivector b(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.coeffs_(idx++) = 0.5 * (a(j, i) - a(i, j));
  return b;
}

double Bivector::operator()(int i, int j) const {
  if (i == j) return 0.0;
  return i < j ? coeffs_(pair_index(i, j, n_)) : -coeffs_(pair_index(j, i, n_));
}

Matrix Bivector::skew_matrix() const {
  Matrix a = Matrix::Zero(n_, n_);
  int idx = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double c = coeffs_(idx++);
      a(j, i) += c;
      a(i, j) -= c;
    }
  }
  return a;
}

Bivector& Bivector::operator+=(const Bivector& other) {
  if (other.n_ != n_) throw DimensionError("bivector dimension mismatch");
  coeffs_ += other.coeffs_;
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& other) {
  if (other.n_ != n_) throw DimensionError("bivector dimension mismatch");
  coeffs_ -= other.coeffs_;
  return *this;
}

Bivector& Bivector::operator*=(double s) {
  coeffs_ *= s;
  return *this;
}

Bivector wedge(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("wedge: vector dimension mismatch");
  const int n = static_cast<int>(x.size());
  Bivector b(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.coeffs()(idx++) = x(i) * y(j) - x(j) * y(i);
  return b;
}

Vector apply(const Bivector& xi, const Vector& z) {
  if (z.size() != xi.dim()) throw DimensionError("bivector_apply: dimension mismatch");
  return xi.skew_matrix() * z;
}

Bivector bracket(const Bivector& xi, const Bivector& eta) {
  if (xi.dim() != eta.dim()) throw DimensionError("bracket: dimension mismatch");
  const Matrix a = xi.skew_matrix();
  const Matrix b = eta.skew_matrix();
  return Bivector::from_skew(a * b - b * a);
}

double inner(const Bivector& xi, const Bivector& eta) {
  if (xi.dim() != eta.dim()) throw DimensionError("inner: dimension mismatch");
  return xi.coeffs().dot(eta.coeffs());
}

}  // namespace curvlab
