#include <cmath>

#include "curvlab/holonomy.hpp"

namespace curvlab {

namespace {

// (I, J, K) -> slot 1, 2, 3 inside a block; the other two units in cyclic order.
constexpr int kSlot[3] = {1, 2, 3};
constexpr int kFirst[3] = {2, 3, 1};
constexpr int kSecond[3] = {3, 1, 2};

}  // namespace

QuaternionFrame::QuaternionFrame(const EuclideanSpace& space) : m_(space.structure_size()) {
  if (space.kind() != StructureKind::quaternion_kaehler)
    throw StructureError("quaternion frame needs a quaternion-Kaehler structure");
  const int n = space.dim();
  const int m = m_;
  // e(q, k) is e_{4k+q}: q = 0 is f_k itself, q = 1, 2, 3 are I f_k, J f_k, K f_k.
  auto e = [&](int q, int k, int q2, int k2) { return Bivector::basis(n, 4 * k + q, 4 * k2 + q2); };
  const auto ijk = space.structure().ijk();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double inv_sqrt2m = 1.0 / std::sqrt(2.0 * m);

  for (int l = 0; l < 3; ++l) {
    const int s = kSlot[l], a = kFirst[l], b = kSecond[l];
    omega_.push_back(Bivector::from_skew(ijk[l]));
    plus_.emplace_back(n);
    minus_.emplace_back(n);
    for (int i = 0; i < m; ++i) {
      plus_[l] += inv_sqrt2m * (e(0, i, s, i) + e(a, i, b, i));
      minus_[l] += inv_sqrt2m * (e(0, i, s, i) - e(a, i, b, i));
      singles_[l].push_back(inv_sqrt2 * (e(0, i, s, i) - e(a, i, b, i)));
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        pairs_[l].push_back(0.5 * (e(0, i, s, j) + e(0, j, s, i) - e(a, i, b, j) - e(a, j, b, i)));
    for (int k = 0; k + 1 < m; ++k) {
      Bivector t = -static_cast<double>(k + 1) * singles_[l][k + 1];
      for (int j = 0; j <= k; ++j) t += singles_[l][j];
      t *= 1.0 / std::sqrt(static_cast<double>((k + 1) * (k + 2)));
      tildes_[l].push_back(std::move(t));
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      w_.push_back(0.5 * (e(0, i, 0, j) + e(1, i, 1, j) + e(2, i, 2, j) + e(3, i, 3, j)));
}

int QuaternionFrame::pair_slot(int i, int j) const {
  if (i < 0 || j >= m_ || i >= j) throw DimensionError("frame pair index out of range");
  return pair_index(i, j, m_);
}

const Bivector& QuaternionFrame::w(int i, int j) const { return w_[pair_slot(i, j)]; }

const Bivector& QuaternionFrame::pair(int l, int i, int j) const {
  return pairs_.at(l)[pair_slot(i, j)];
}

const Bivector& QuaternionFrame::single(int l, int i) const { return singles_.at(l).at(i); }

const Bivector& QuaternionFrame::tilde(int l, int i) const { return tildes_.at(l).at(i); }

Matrix QuaternionFrame::sp_list() const {
  std::vector<const Bivector*> cols;
  for (const auto& b : w_) cols.push_back(&b);
  for (int l = 0; l < 3; ++l)
    for (const auto& b : pairs_[l]) cols.push_back(&b);
  for (int l = 0; l < 3; ++l)
    for (const auto& b : singles_[l]) cols.push_back(&b);
  Matrix out(omega_[0].coeffs().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(Eigen::Index(c)) = cols[c]->coeffs();
  return out;
}

Matrix QuaternionFrame::wolf_eigenbasis() const {
  std::vector<const Bivector*> cols;
  for (const auto& b : plus_) cols.push_back(&b);
  for (const auto& b : minus_) cols.push_back(&b);
  for (const auto& b : w_) cols.push_back(&b);
  for (int l = 0; l < 3; ++l)
    for (const auto& b : pairs_[l]) cols.push_back(&b);
  for (int l = 0; l < 3; ++l)
    for (const auto& b : tildes_[l]) cols.push_back(&b);
  Matrix out(omega_[0].coeffs().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(Eigen::Index(c)) = cols[c]->coeffs();
  return out;
}

}  // namespace curvlab
