#include "curvlab/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace curvlab {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMap = Eigen::Map<RowMajor>;
using ConstRowMap = Eigen::Map<const RowMajor>;

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

void require_rank(const Tensor& t, int rank, const char* what) {
  if (t.rank() != rank) throw DimensionError(std::string(what) + ": wrong tensor rank");
}

}  // namespace

Tensor::Tensor(int rank, int dim) : rank_(rank), n_(dim) {
  if (rank < 1 || dim < 1) throw DimensionError("tensor rank and dimension must be positive");
  data_.assign(ipow(static_cast<std::size_t>(dim), rank), 0.0);
}

Tensor Tensor::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("from_matrix: matrix must be square");
  const int n = static_cast<int>(m.rows());
  Tensor t(2, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = m(i, j);
  return t;
}

Matrix Tensor::as_matrix() const {
  if (rank_ != 2) throw DimensionError("as_matrix: rank-2 tensor required");
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

void Tensor::require_same_shape(const Tensor& other) const {
  if (other.rank_ != rank_ || other.n_ != n_) throw DimensionError("tensor shape mismatch");
}

double Tensor::dot(const Tensor& other) const {
  require_same_shape(other);
  double acc = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) acc += data_[i] * other.data_[i];
  return acc;
}

double Tensor::norm_sq() const { return dot(*this); }

double Tensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

double curvature_symmetry_residual(const Tensor& t) {
  require_rank(t, 4, "curvature_symmetry_residual");
  const int n = t.dim();
  double r = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const double v = t(x, y, z, w);
          r = std::max({r, std::abs(v + t(y, x, z, w)), std::abs(v + t(x, y, w, z)),
                        std::abs(v - t(z, w, x, y))});
        }
  return r;
}

double bianchi_residual(const Tensor& t) {
  require_rank(t, 4, "bianchi_residual");
  const int n = t.dim();
  double r = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          r = std::max(r, std::abs(t(x, y, z, w) + t(y, z, x, w) + t(z, x, y, w)));
  return r;
}

CurvatureTensor::CurvatureTensor(int n) : t_(4, n) {}

CurvatureTensor::CurvatureTensor(Tensor t, double tol) : t_(std::move(t)) {
  require_rank(t_, 4, "CurvatureTensor");
  const double bound = tol * (1.0 + t_.max_abs());
  const double sym = curvature_symmetry_residual(t_);
  if (sym > bound) throw SymmetryError("curvature symmetries violated", sym);
  const double b = bianchi_residual(t_);
  if (b > bound) throw SymmetryError("first Bianchi identity violated", b);
}

CurvatureTensor CurvatureTensor::unchecked(Tensor t) {
  require_rank(t, 4, "CurvatureTensor");
  return CurvatureTensor(std::move(t), Unchecked{});
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& o) {
  t_ += o.t_;
  return *this;
}
CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& o) {
  t_ -= o.t_;
  return *this;
}
CurvatureTensor& CurvatureTensor::operator*=(double s) {
  t_ *= s;
  return *this;
}

CurvatureOperator::CurvatureOperator(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("curvature operator must be square");
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (m_.size() && asym > tol * (1.0 + m_.cwiseAbs().maxCoeff()))
    throw SymmetryError("curvature operator is not symmetric", asym);
  m_ = 0.5 * (m_ + m_.transpose()).eval();
}

Tensor kulkarni_nomizu(const Tensor& s, const Tensor& t) {
  require_rank(s, 2, "kulkarni_nomizu");
  require_rank(t, 2, "kulkarni_nomizu");
  if (s.dim() != t.dim()) throw DimensionError("kulkarni_nomizu: dimension mismatch");
  const int n = s.dim();
  Tensor out(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          out(x, y, z, w) = s(x, z) * t(y, w) - s(x, w) * t(y, z) + s(y, w) * t(x, z) -
                            s(y, z) * t(x, w);
  return out;
}

CurvatureTensor kulkarni_nomizu_curvature(const Tensor& s, const Tensor& t) {
  return CurvatureTensor(kulkarni_nomizu(s, t));
}

Tensor outer(const Tensor& s, const Tensor& t) {
  require_rank(s, 2, "outer");
  require_rank(t, 2, "outer");
  if (s.dim() != t.dim()) throw DimensionError("outer: dimension mismatch");
  const int n = s.dim();
  Tensor out(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) out(x, y, z, w) = s(x, y) * t(z, w);
  return out;
}

Tensor metric_tensor(int n) { return Tensor::from_matrix(Matrix::Identity(n, n)); }

CurvatureOperator to_operator(const CurvatureTensor& rm) {
  const int n = rm.dim();
  const int big_n = n * (n - 1) / 2;
  Matrix op(big_n, big_n);
  for (int a = 0; a < big_n; ++a) {
    const auto [i, j] = pair_at(a, n);
    for (int b = 0; b < big_n; ++b) {
      const auto [k, l] = pair_at(b, n);
      op(a, b) = rm(i, j, k, l);
    }
  }
  return CurvatureOperator(std::move(op), 1e-10);
}

Tensor tensor_from_operator_matrix(const Matrix& op) {
  const auto big_n = static_cast<int>(op.rows());
  int n = 1;
  while (n * (n - 1) / 2 < big_n) ++n;
  if (n * (n - 1) / 2 != big_n || op.cols() != big_n)
    throw DimensionError("operator size is not n(n-1)/2");
  Tensor rm(4, n);
  for (int a = 0; a < big_n; ++a) {
    const auto [i, j] = pair_at(a, n);
    for (int b = 0; b < big_n; ++b) {
      const auto [k, l] = pair_at(b, n);
      const double v = op(a, b);
      rm(i, j, k, l) = v;
      rm(j, i, k, l) = -v;
      rm(i, j, l, k) = -v;
      rm(j, i, l, k) = v;
    }
  }
  return rm;
}

CurvatureTensor from_operator(const CurvatureOperator& op, double tol) {
  return CurvatureTensor(tensor_from_operator_matrix(op.matrix()), tol);
}

Tensor lie_action(const Bivector& l, const Tensor& t) {
  if (l.dim() != t.dim()) throw DimensionError("lie_action: dimension mismatch");
  return lie_action(l.skew_matrix(), t);
}

// View the tensor as blocks of shape (n x inner) around the slot; the slot
// index then transforms by a left product with A^T, or a right product with A
// when the slot is the last one.
Tensor pullback_slot(const Tensor& t, const Matrix& a, int slot) {
  const int n = t.dim();
  const int k = t.rank();
  if (a.rows() != n || a.cols() != n) throw DimensionError("pullback_slot: dimension mismatch");
  if (slot < 0 || slot >= k) throw DimensionError("pullback_slot: slot out of range");
  const auto nn = static_cast<Eigen::Index>(n);
  const auto outer_count = static_cast<Eigen::Index>(ipow(std::size_t(n), slot));
  const auto inner = static_cast<Eigen::Index>(ipow(std::size_t(n), k - slot - 1));
  Tensor out(k, n);
  if (inner == 1) {
    const RowMajor am = a;
    ConstRowMap src(t.data().data(), outer_count, nn);
    RowMap dst(out.data().data(), outer_count, nn);
    dst.noalias() = src * am;
    return out;
  }
  const RowMajor at = a.transpose();
  for (Eigen::Index o = 0; o < outer_count; ++o) {
    ConstRowMap src(t.data().data() + o * nn * inner, nn, inner);
    RowMap dst(out.data().data() + o * nn * inner, nn, inner);
    dst.noalias() = at * src;
  }
  return out;
}

Tensor lie_action(const Matrix& skew, const Tensor& t) {
  if (t.rank() != 2 && t.rank() != 4)
    throw DimensionError("lie_action: only rank 2 and rank 4 tensors are supported");
  if (skew.rows() != t.dim() || skew.cols() != t.dim())
    throw DimensionError("lie_action: dimension mismatch");
  Tensor out(t.rank(), t.dim());
  for (int slot = 0; slot < t.rank(); ++slot) out -= pullback_slot(t, skew, slot);
  return out;
}

Tensor ricci(const Tensor& rm) {
  require_rank(rm, 4, "ricci");
  const int n = rm.dim();
  Tensor ric(2, n);
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += rm(i, y, i, w);
      ric(y, w) = acc;
    }
  return ric;
}

double scalar(const Tensor& rm) {
  const Tensor ric = ricci(rm);
  double s = 0.0;
  for (int i = 0; i < rm.dim(); ++i) s += ric(i, i);
  return s;
}

TraceResiduals total_traces(const Tensor& t, const EuclideanSpace& space) {
  require_rank(t, 4, "total_traces");
  if (t.dim() != space.dim()) throw DimensionError("total_traces: dimension mismatch");
  TraceResiduals r;
  const int n = t.dim();
  const Tensor ric = ricci(t);
  r.metric = ric.max_abs();
  if (space.kind() != StructureKind::generic) {
    const Matrix& j = space.structure().j();
    for (int z = 0; z < n; ++z)
      for (int w = 0; w < n; ++w) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
          for (int a = 0; a < n; ++a) acc += j(a, i) * t(i, a, z, w);
        r.complex = std::max(r.complex, std::abs(acc));
      }
  }
  return r;
}

Tensor kaehler_form(const Matrix& j) { return Tensor::from_matrix(j.transpose()); }

Tensor compose_with_complex(const Tensor& s, const Matrix& j) {
  require_rank(s, 2, "compose_with_complex");
  // S(JX, Y) with J e_x = sum_a J(a, x) e_a.
  return Tensor::from_matrix(j.transpose() * s.as_matrix());
}

Matrix random_symmetric(int size, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix s(size, size);
  const double off = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < size; ++a) {
    s(a, a) = normal(rng);
    for (int b = a + 1; b < size; ++b) {
      const double v = off * normal(rng);
      s(a, b) = v;
      s(b, a) = v;
    }
  }
  return s;
}

Tensor bianchi_project(const Tensor& t) {
  require_rank(t, 4, "bianchi_project");
  const int n = t.dim();
  Tensor out(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          out(x, y, z, w) =
              t(x, y, z, w) - (t(x, y, z, w) + t(y, z, x, w) + t(z, x, y, w)) / 3.0;
  return out;
}

CurvatureTensor random_curvature_tensor(int n, std::mt19937_64& rng) {
  const Matrix s = random_symmetric(n * (n - 1) / 2, rng);
  return CurvatureTensor::unchecked(bianchi_project(tensor_from_operator_matrix(s)));
}

}  // namespace curvlab
