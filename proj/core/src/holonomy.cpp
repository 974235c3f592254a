#include "curvlab/holonomy.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace curvlab {

namespace {

int space_size(const EuclideanSpace& space) { return space.structure_size(); }

}  // namespace

HolonomyAlgebra::HolonomyAlgebra(EuclideanSpace space, StructureKind kind, Matrix basis,
                                 std::vector<int> summands, double tol)
    : space_(std::move(space)), kind_(kind), basis_(std::move(basis)), summands_(std::move(summands)) {
  const int big_n = space_.bivector_dim();
  if (basis_.rows() != big_n) throw DimensionError("algebra basis has the wrong length");
  const int d = dim();
  int total = 0;
  for (int s : summands_) total += s;
  if (total != d) throw DimensionError("summand dimensions do not add up to the algebra dimension");
  const double ortho = (basis_.transpose() * basis_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (d > 0 && ortho > tol) throw DimensionError("algebra basis is not orthonormal");

  const int n = space_.dim();
  skew_.reserve(static_cast<std::size_t>(d));
  derivation_.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    skew_.push_back(Bivector(n, basis_.col(a)).skew_matrix());
    derivation_.push_back(derivation_matrix(skew_.back()));
  }

  const auto du = static_cast<std::size_t>(d);
  c_.assign(du * du * du, 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Matrix comm = skew_[a] * skew_[b] - skew_[b] * skew_[a];
      const Vector v = Bivector::from_skew(comm, 1e-9).coeffs();
      const Vector coords = basis_.transpose() * v;
      for (int c = 0; c < d; ++c) c_[(a * du + b) * du + c] = coords(c);
      closure_ = std::max(closure_, (v - basis_ * coords).norm());
    }
}

Bivector HolonomyAlgebra::element(int a) const { return Bivector(space_.dim(), basis_.col(a)); }

Vector HolonomyAlgebra::coordinates(const Bivector& xi) const {
  if (xi.dim() != space_.dim()) throw DimensionError("bivector lives in a different space");
  return basis_.transpose() * xi.coeffs();
}

Matrix commutant_basis(int n, const std::vector<Matrix>& maps) {
  const int big_n = n * (n - 1) / 2;
  Matrix normal = Matrix::Zero(big_n, big_n);
  // Column a of each constraint block is vec([E_a, S]).
  for (const Matrix& s : maps) {
    if (s.rows() != n || s.cols() != n) throw DimensionError("commutant: map has the wrong size");
    Matrix block(n * n, big_n);
    for (int a = 0; a < big_n; ++a) {
      const auto [i, j] = pair_at(a, n);
      const Matrix e = Bivector::basis(n, i, j).skew_matrix();
      const Matrix c = e * s - s * e;
      block.col(a) = Eigen::Map<const Vector>(c.data(), n * n);
    }
    normal.noalias() += block.transpose() * block;
  }
  const Matrix kernel = kernel_from_normal(normal);
  const Matrix projector = kernel * kernel.transpose();
  return gram_schmidt(projector);
}

Matrix derivation_matrix(const Matrix& skew) {
  const auto n = static_cast<int>(skew.rows());
  const int big_n = n * (n - 1) / 2;
  Matrix d = Matrix::Zero(big_n, big_n);
  // Row (i,j) holds the coordinates of -(L e_i ^ e_j + e_i ^ L e_j).
  auto add = [&](int row, int p, int q, double v) {
    if (p == q || v == 0.0) return;
    if (p < q)
      d(row, pair_index(p, q, n)) += v;
    else
      d(row, pair_index(q, p, n)) -= v;
  };
  for (int a = 0; a < big_n; ++a) {
    const auto [i, j] = pair_at(a, n);
    for (int c = 0; c < n; ++c) {
      add(a, c, j, -skew(c, i));
      add(a, i, c, -skew(c, j));
    }
  }
  return d;
}

Matrix lie_action_operator(const Matrix& derivation, const Matrix& op) {
  Matrix out = derivation * op;
  out += op * derivation.transpose();
  return out;
}

CurvatureOperator project(const CurvatureOperator& op, const HolonomyAlgebra& algebra) {
  const Matrix& b = algebra.basis_matrix();
  if (op.size() != b.rows()) throw DimensionError("project: operator and algebra sizes differ");
  return CurvatureOperator(b.transpose() * op.matrix() * b, 1e-10);
}

Matrix embed(const Matrix& restricted, const HolonomyAlgebra& algebra) {
  const Matrix& b = algebra.basis_matrix();
  if (restricted.rows() != b.cols() || restricted.cols() != b.cols())
    throw DimensionError("embed: operator and algebra sizes differ");
  return b * restricted * b.transpose();
}

double off_algebra_mass(const Matrix& op, const HolonomyAlgebra& algebra) {
  const Matrix& b = algebra.basis_matrix();
  const Matrix inner = b.transpose() * op * b;
  return (op - b * inner * b.transpose()).norm();
}

std::vector<Tensor> t_hat(const Tensor& t, const HolonomyAlgebra& algebra) {
  if (t.dim() != algebra.space().dim()) throw DimensionError("t_hat: dimension mismatch");
  std::vector<Tensor> out;
  out.reserve(static_cast<std::size_t>(algebra.dim()));
  for (int a = 0; a < algebra.dim(); ++a) out.push_back(lie_action(algebra.skew_matrix(a), t));
  return out;
}

double hat_norm_sq(const Tensor& t, const HolonomyAlgebra& algebra) {
  double acc = 0.0;
  for (const Tensor& c : t_hat(t, algebra)) acc += c.norm_sq();
  return acc;
}

double hat_norm_sq_operator(const CurvatureTensor& rm, const HolonomyAlgebra& algebra) {
  if (rm.dim() != algebra.space().dim()) throw DimensionError("hat norm: dimension mismatch");
  const Matrix r = to_operator(rm).matrix();
  double acc = 0.0;
  for (int a = 0; a < algebra.dim(); ++a)
    acc += lie_action_operator(algebra.derivation(a), r).squaredNorm();
  return acc;
}

HolonomyAlgebra so_algebra(const EuclideanSpace& space) {
  const int big_n = space.bivector_dim();
  return {space, StructureKind::generic, Matrix::Identity(big_n, big_n), {big_n}};
}

HolonomyAlgebra u_algebra(const EuclideanSpace& space) {
  if (space.kind() != StructureKind::kaehler)
    throw StructureError("u(m) needs a Kaehler structure");
  const Matrix basis = commutant_basis(space.dim(), {space.structure().j()});
  const int m = space_size(space);
  if (basis.cols() != m * m) throw ConvergenceError("commutant of J has the wrong dimension");
  return {space, StructureKind::kaehler, basis, {m * m}};
}

HolonomyAlgebra sp_sp1_algebra(const EuclideanSpace& space) {
  if (space.kind() != StructureKind::quaternion_kaehler)
    throw StructureError("sp(m) + sp(1) needs a quaternion-Kaehler structure");
  const int m = space_size(space);
  const auto ijk = space.structure().ijk();
  const Matrix sp = commutant_basis(space.dim(), {ijk[0], ijk[1], ijk[2]});
  const int dsp = m * (2 * m + 1);
  if (sp.cols() != dsp) throw ConvergenceError("commutant of I, J, K has the wrong dimension");
  Matrix basis(space.bivector_dim(), dsp + 3);
  basis.leftCols(dsp) = sp;
  const double scale = 1.0 / std::sqrt(2.0 * m);
  for (int l = 0; l < 3; ++l) basis.col(dsp + l) = scale * Bivector::from_skew(ijk[l]).coeffs();
  return {space, StructureKind::quaternion_kaehler, basis, {dsp, 3}};
}

HolonomyAlgebra holonomy_algebra(const EuclideanSpace& space) {
  switch (space.kind()) {
    case StructureKind::generic:
      return so_algebra(space);
    case StructureKind::kaehler:
      return u_algebra(space);
    case StructureKind::quaternion_kaehler:
      return sp_sp1_algebra(space);
  }
  throw StructureError("unknown structure kind");
}

std::shared_ptr<const HolonomyAlgebra> cached_algebra(StructureKind kind, int size) {
  static std::shared_mutex mutex;
  static std::map<std::pair<StructureKind, int>, std::shared_ptr<const HolonomyAlgebra>> cache;
  const auto key = std::make_pair(kind, size);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const HolonomyAlgebra>(
      holonomy_algebra(EuclideanSpace::make(kind, size)));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

}  // namespace curvlab
