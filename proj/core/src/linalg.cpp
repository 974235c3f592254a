#include <algorithm>
#include <cmath>
#include <vector>

#include "curvlab/euclid.hpp"

namespace curvlab {

std::vector<EigenCluster> cluster_spectrum(const Vector& ascending, double gap) {
  std::vector<EigenCluster> clusters;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ascending.size(); ++i) {
    if (i == ascending.size() || ascending(i) - ascending(i - 1) > gap) {
      const double mean = ascending.segment(start, i - start).mean();
      clusters.push_back({mean, static_cast<int>(i - start)});
      start = i;
    }
  }
  return clusters;
}

Matrix kernel_from_normal(const Matrix& normal, double threshold) {
  const SpectralData spec = symmetric_eigen(normal);
  const double top = spec.eigenvalues.size() ? std::max(1.0, spec.eigenvalues.maxCoeff()) : 1.0;
  Eigen::Index count = 0;
  while (count < spec.eigenvalues.size() && spec.eigenvalues(count) < threshold * top) ++count;
  return spec.eigenvectors.leftCols(count);
}

Matrix gram_schmidt(const Matrix& columns, double drop_tol) {
  std::vector<Vector> kept;
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    Vector v = columns.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& q : kept) v -= q.dot(v) * q;
    const double r = v.norm();
    if (r < drop_tol) continue;
    kept.push_back(v / r);
  }
  Matrix q(columns.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) q.col(Eigen::Index(i)) = kept[i];
  return q;
}

}  // namespace curvlab
