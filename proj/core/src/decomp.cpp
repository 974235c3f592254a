#include "curvlab/decomp.hpp"

#include <cmath>

#include "curvlab/holonomy.hpp"
#include "curvlab/models.hpp"

namespace curvlab {

const CurvatureTensor& CurvatureDecomposition::part(const std::string& name) const {
  for (const auto& p : parts)
    if (p.name == name) return p.tensor;
  throw DomainError("decomposition has no part '" + name + "'");
}

double CurvatureDecomposition::coefficient(const std::string& name) const {
  for (const auto& [key, value] : coefficients)
    if (key == name) return value;
  throw DomainError("decomposition has no coefficient '" + name + "'");
}

CurvatureTensor CurvatureDecomposition::sum() const {
  if (parts.empty()) throw DomainError("empty decomposition");
  CurvatureTensor s = parts.front().tensor;
  for (std::size_t i = 1; i < parts.size(); ++i) s += parts[i].tensor;
  return s;
}

double CurvatureDecomposition::max_overlap() const {
  double r = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      r = std::max(r, std::abs(parts[i].tensor.dot(parts[j].tensor)));
  return r;
}

CurvatureDecomposition weyl_decompose(const CurvatureTensor& rm) {
  const int n = rm.dim();
  if (n < 4) throw DomainError("Weyl decomposition needs n >= 4");
  const Tensor g = metric_tensor(n);
  const Tensor ric = ricci(rm);
  const double scal = scalar(rm);
  const Tensor ric0 = ric - (scal / n) * g;

  const double c_scal = scal / (2.0 * (n - 1) * n);
  const double c_ric = 1.0 / (n - 2);
  auto scalar_part = CurvatureTensor::unchecked(c_scal * kulkarni_nomizu(g, g));
  auto ric0_part = CurvatureTensor::unchecked(c_ric * kulkarni_nomizu(g, ric0));
  CurvatureTensor weyl = rm - scalar_part - ric0_part;

  CurvatureDecomposition d;
  d.kind = StructureKind::generic;
  d.coefficients = {{"scal", scal}, {"scalar_part", c_scal}, {"ric0_part", c_ric}};
  d.parts = {{"scalar_part", std::move(scalar_part)},
             {"ric0_part", std::move(ric0_part)},
             {"weyl", std::move(weyl)}};
  return d;
}

namespace {

// Closed formula for the Bochner tensor, written slot by slot.
Tensor bochner_explicit(const Tensor& rm, const Matrix& j, double scal, int m) {
  const int n = rm.dim();
  const Matrix ric = ricci(rm).as_matrix();
  // ricj(x, z) = Ric(J e_x, e_z); gj(x, z) = g(J e_x, e_z).
  const Matrix ricj = j.transpose() * ric;
  const Matrix gj = j.transpose();
  const double a = 1.0 / (2.0 * (m + 2));
  const double b = scal / (4.0 * (m + 1) * (m + 2));
  Tensor out(4, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const double gxz = x == z, gyw = y == w, gxw = x == w, gyz = y == z;
          const double ric_part = ric(x, z) * gyw - ric(x, w) * gyz + gxz * ric(y, w) -
                                  gxw * ric(y, z) + ricj(x, z) * gj(y, w) -
                                  ricj(x, w) * gj(y, z) + gj(x, z) * ricj(y, w) -
                                  gj(x, w) * ricj(y, z) + 2.0 * ricj(x, y) * gj(z, w) +
                                  2.0 * gj(x, y) * ricj(z, w);
          const double g_part = gxz * gyw - gxw * gyz + gj(x, z) * gj(y, w) -
                                gj(x, w) * gj(y, z) + 2.0 * gj(x, y) * gj(z, w);
          out(x, y, z, w) = rm(x, y, z, w) - a * ric_part + b * g_part;
        }
  return out;
}

}  // namespace

BochnerResult bochner_decompose(const CurvatureTensor& rm, const EuclideanSpace& space,
                                double tol) {
  if (space.kind() != StructureKind::kaehler)
    throw StructureError("Bochner decomposition needs a Kaehler structure");
  if (rm.dim() != space.dim()) throw DimensionError("Bochner decomposition: dimension mismatch");
  const Matrix& j = space.structure().j();
  const double kres = kaehler_symmetry_residual(rm.tensor(), j);
  if (kres > tol * (1.0 + rm.tensor().max_abs()))
    throw SymmetryError("tensor is not a Kaehler curvature tensor", kres);

  const int m = space.structure_size();
  const int n = space.dim();
  const Tensor g = metric_tensor(n);
  const Tensor omega = kaehler_form(j);
  const Tensor ric = ricci(rm);
  const double scal = scalar(rm);
  const Tensor ric0 = ric - (scal / n) * g;
  const Tensor rho0 = compose_with_complex(ric0, j);

  const double c_scal = scal / (4.0 * m * (m + 1));
  const double c_ric = 1.0 / (2.0 * (m + 2));
  auto scalar_part = const_hol_shape(m) * c_scal;
  Tensor mid = kulkarni_nomizu(ric0, g);
  mid += kulkarni_nomizu(rho0, omega);
  mid += 2.0 * (outer(rho0, omega) + outer(omega, rho0));
  auto ric0_part = CurvatureTensor::unchecked(c_ric * mid);

  auto bochner = CurvatureTensor::unchecked(bochner_explicit(rm.tensor(), j, scal, m));
  const CurvatureTensor subtracted = rm - scalar_part - ric0_part;

  BochnerResult r;
  r.route_residual = (bochner.tensor() - subtracted.tensor()).max_abs();
  r.decomposition.kind = StructureKind::kaehler;
  r.decomposition.coefficients = {{"scal", scal}, {"scalar_part", c_scal}, {"ric0_part", c_ric}};
  r.decomposition.parts = {{"scalar_part", std::move(scalar_part)},
                           {"ric0_part", std::move(ric0_part)},
                           {"bochner", std::move(bochner)}};
  return r;
}

CurvatureDecomposition qk_decompose(const CurvatureTensor& rm, const EuclideanSpace& space,
                                    double tol) {
  if (space.kind() != StructureKind::quaternion_kaehler)
    throw StructureError("quaternion-Kaehler decomposition needs a quaternionic structure");
  if (rm.dim() != space.dim()) throw DimensionError("QK decomposition: dimension mismatch");
  const int m = space.structure_size();
  const auto algebra = cached_algebra(StructureKind::quaternion_kaehler, m);
  const Matrix op = to_operator(rm).matrix();
  const double off = off_algebra_mass(op, *algebra);
  if (off > tol * (1.0 + op.norm()))
    throw SymmetryError("curvature operator is not supported on sp(m) + sp(1)", off);

  const double scal = scalar(rm);
  const double c = scal / (16.0 * m * (m + 2));
  CurvatureTensor multiple = hp(m) * c;
  CurvatureTensor rest = rm - multiple;

  CurvatureDecomposition d;
  d.kind = StructureKind::quaternion_kaehler;
  d.coefficients = {{"scal", scal}, {"hp_multiple", c}};
  d.parts = {{"hp_multiple", std::move(multiple)}, {"hyperkaehler_part", std::move(rest)}};
  return d;
}

CurvatureDecomposition decompose(const CurvatureTensor& rm, const EuclideanSpace& space) {
  switch (space.kind()) {
    case StructureKind::generic:
      return weyl_decompose(rm);
    case StructureKind::kaehler:
      return bochner_decompose(rm, space).decomposition;
    case StructureKind::quaternion_kaehler:
      return qk_decompose(rm, space);
  }
  throw StructureError("unknown structure kind");
}

}  // namespace curvlab
