#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "curvlab/euclid.hpp"

namespace curvlab {

// Cyclic Jacobi on a row-major working copy. Rows p and q are rotated
// contiguously and mirrored into the columns; eigenvectors are kept as rows
// of vt so their rotation is contiguous as well.
SpectralData symmetric_eigen(const Matrix& s, const JacobiOptions& options) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n) throw DimensionError("symmetric_eigen: matrix must be square");
  SpectralData out;
  if (n == 0) {
    out.eigenvalues = Vector(0);
    out.eigenvectors = Matrix(0, 0);
    return out;
  }
  const double scale = s.norm();
  const double asym = (s - s.transpose()).norm();
  if (asym > options.symmetry_tol * std::max(scale, 1e-300))
    throw SymmetryError("symmetric_eigen: input is not symmetric", asym);

  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> a(nn * nn), vt(nn * nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i) {
    vt[i * nn + i] = 1.0;
    for (std::size_t j = 0; j < nn; ++j)
      a[i * nn + j] = 0.5 * (s(Eigen::Index(i), Eigen::Index(j)) + s(Eigen::Index(j), Eigen::Index(i)));
  }

  auto off_norm = [&] {
    double acc = 0.0;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = i + 1; j < nn; ++j) acc += a[i * nn + j] * a[i * nn + j];
    return std::sqrt(2.0 * acc);
  };

  const double target = options.convergence_tol * scale;
  // Rotations on entries below this bound cannot matter: if every off-diagonal
  // entry is this small the off-diagonal norm is already under target.
  const double skip = target / static_cast<double>(nn);

  int sweep = 0;
  double off = off_norm();
  while (off > target) {
    if (sweep >= options.max_sweeps)
      throw ConvergenceError("symmetric_eigen: no convergence after " +
                             std::to_string(options.max_sweeps) + " sweeps (off-diagonal norm " +
                             std::to_string(off) + ")");
    ++sweep;
    for (std::size_t p = 0; p + 1 < nn; ++p) {
      for (std::size_t q = p + 1; q < nn; ++q) {
        const double apq = a[p * nn + q];
        if (std::abs(apq) <= skip) continue;
        const double app = a[p * nn + p];
        const double aqq = a[q * nn + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        double* rp = &a[p * nn];
        double* rq = &a[q * nn];
        for (std::size_t k = 0; k < nn; ++k) {
          const double x = rp[k];
          const double y = rq[k];
          rp[k] = c * x - sn * y;
          rq[k] = sn * x + c * y;
        }
        for (std::size_t k = 0; k < nn; ++k) {
          a[k * nn + p] = rp[k];
          a[k * nn + q] = rq[k];
        }
        a[p * nn + p] = app - t * apq;
        a[q * nn + q] = aqq + t * apq;
        a[p * nn + q] = 0.0;
        a[q * nn + p] = 0.0;

        double* vp = &vt[p * nn];
        double* vq = &vt[q * nn];
        for (std::size_t k = 0; k < nn; ++k) {
          const double x = vp[k];
          const double y = vq[k];
          vp[k] = c * x - sn * y;
          vq[k] = sn * x + c * y;
        }
      }
    }
    off = off_norm();
  }

  std::vector<std::size_t> order(nn);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * nn + x] < a[y * nn + y]; });
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (std::size_t col = 0; col < nn; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues(Eigen::Index(col)) = a[src * nn + src];
    for (std::size_t k = 0; k < nn; ++k)
      out.eigenvectors(Eigen::Index(k), Eigen::Index(col)) = vt[src * nn + k];
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace curvlab
