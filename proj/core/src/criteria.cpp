#include "curvlab/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "curvlab/decomp.hpp"
#include "curvlab/models.hpp"

namespace curvlab {

namespace {

void require_restricted(const CurvatureOperator& op, const HolonomyAlgebra& algebra) {
  if (op.size() != algebra.dim())
    throw DimensionError("operator size does not match the algebra dimension");
}

CurvatureTerm term_from_gram(const CurvatureOperator& restricted, const Matrix& gram) {
  CurvatureTerm t;
  const SpectralData spec = restricted.spectrum();
  const Matrix rotated = spec.eigenvectors.transpose() * gram * spec.eigenvectors;
  for (Eigen::Index a = 0; a < rotated.rows(); ++a) t.eigen_route += spec.eigenvalues(a) * rotated(a, a);
  t.direct_route = restricted.matrix().cwiseProduct(gram).sum();
  return t;
}

}  // namespace

CurvatureTerm curvature_term(const CurvatureOperator& restricted, const Tensor& t,
                             const HolonomyAlgebra& algebra) {
  require_restricted(restricted, algebra);
  const std::vector<Tensor> lifted = t_hat(t, algebra);
  const int d = algebra.dim();
  Matrix gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) gram(a, b) = gram(b, a) = lifted[a].dot(lifted[b]);
  return term_from_gram(restricted, gram);
}

CurvatureTerm curvature_term_operator(const CurvatureOperator& restricted,
                                      const CurvatureTensor& rm, const HolonomyAlgebra& algebra) {
  require_restricted(restricted, algebra);
  if (rm.dim() != algebra.space().dim()) throw DimensionError("curvature term: dimension mismatch");
  const Matrix r = to_operator(rm).matrix();
  const int d = algebra.dim();
  std::vector<Matrix> lifted;
  lifted.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) lifted.push_back(lie_action_operator(algebra.derivation(a), r));
  Matrix gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) gram(a, b) = gram(b, a) = lifted[a].cwiseProduct(lifted[b]).sum();
  return term_from_gram(restricted, gram);
}

EigenFrame eigen_frame(const CurvatureOperator& restricted, const HolonomyAlgebra& algebra) {
  require_restricted(restricted, algebra);
  const int d = algebra.dim();
  EigenFrame f;
  f.dim = d;
  f.spectrum = restricted.spectrum();
  if (d == 0) return f;
  Tensor c(3, d);
  auto out = c.data();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int e = 0; e < d; ++e)
        out[(static_cast<std::size_t>(a) * d + b) * d + e] = algebra.structure_constant(a, b, e);
  const Matrix& q = f.spectrum.eigenvectors;
  for (int slot = 0; slot < 3; ++slot) c = pullback_slot(c, q, slot);
  f.constants.assign(c.data().begin(), c.data().end());
  return f;
}

HatNormFormula hat_norm_formula(const CurvatureOperator& restricted,
                                const HolonomyAlgebra& algebra) {
  const EigenFrame f = eigen_frame(restricted, algebra);
  const Vector& lam = f.spectrum.eigenvalues;
  HatNormFormula h;
  h.per_element.assign(static_cast<std::size_t>(f.dim), 0.0);
  for (int c = 0; c < f.dim; ++c) {
    double acc = 0.0;
    for (int a = 0; a < f.dim; ++a)
      for (int b = a + 1; b < f.dim; ++b) {
        const double diff = lam(a) - lam(b);
        const double s = f(c, a, b);
        acc += diff * diff * s * s;
      }
    h.per_element[c] = 2.0 * acc;
    h.total += 2.0 * acc;
  }
  return h;
}

double lambda_tripod(double a, double b, double c) {
  return a * (b - c) * (b - c) + b * (c - a) * (c - a) + c * (a - b) * (a - b);
}

double curvature_term_self(const CurvatureOperator& restricted, const HolonomyAlgebra& algebra) {
  const EigenFrame f = eigen_frame(restricted, algebra);
  const Vector& lam = f.spectrum.eigenvalues;
  double acc = 0.0;
  for (int a = 0; a < f.dim; ++a)
    for (int b = a + 1; b < f.dim; ++b)
      for (int c = b + 1; c < f.dim; ++c) {
        const double s = f(a, b, c);
        if (s == 0.0) continue;
        acc += lambda_tripod(lam(a), lam(b), lam(c)) * s * s;
      }
  return 2.0 * acc;
}

namespace {
double parity(int n) { return n % 2 == 0 ? 1.0 : -1.0; }
}  // namespace

CriterionSpec CriterionSpec::weyl(int n) {
  if (n < 2) throw DomainError("weyl criterion needs n >= 2");
  return {(n - 1) / 2, (1.0 + parity(n)) / 4.0};
}

CriterionSpec CriterionSpec::kaehler(int m) {
  if (m < 1) throw DomainError("kaehler criterion needs m >= 1");
  return {(m + 1) / 2, (1.0 + parity(m)) / 4.0};
}

CriterionSpec CriterionSpec::qk(int m) {
  if (m < 1) throw DomainError("qk criterion needs m >= 1");
  return {(m + 1) / 2, (5.0 + 3.0 * parity(m)) / 12.0};
}

CriterionSpec CriterionSpec::from_hat_constant(long num, long den) {
  if (den <= 0 || num <= 0) throw DomainError("hat constant must be a positive rational");
  const long scaled = 8 * den;
  const long k = num / scaled;
  if (k < 1) throw DomainError("hat constant below 8 gives no criterion");
  return {static_cast<int>(k), static_cast<double>(num - k * scaled) / static_cast<double>(scaled)};
}

CriterionResult weighted_criterion(const std::vector<double>& ascending, const CriterionSpec& spec) {
  if (!std::is_sorted(ascending.begin(), ascending.end()))
    throw DomainError("criterion needs an ascending spectrum");
  if (spec.k < 0 || spec.w < 0.0 || spec.w > 1.0) throw DomainError("invalid criterion spec");
  const std::size_t need = static_cast<std::size_t>(spec.k) + (spec.w > 0.0 ? 1 : 0);
  if (need > ascending.size()) throw DomainError("criterion needs more eigenvalues than given");
  CriterionResult r;
  for (int i = 0; i < spec.k; ++i) r.value += ascending[static_cast<std::size_t>(i)];
  if (spec.w > 0.0) r.value += spec.w * ascending[static_cast<std::size_t>(spec.k)];
  r.satisfied = r.value >= 0.0;
  r.strict = r.value > 0.0;
  return r;
}

bool k_nonnegative(const std::vector<double>& ascending, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > ascending.size())
    throw DomainError("k out of range");
  if (!std::is_sorted(ascending.begin(), ascending.end()))
    throw DomainError("k_nonnegative needs an ascending spectrum");
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += ascending[static_cast<std::size_t>(i)];
  return s >= 0.0;
}

double invariance_defect(const CurvatureTensor& rm, const HolonomyAlgebra& algebra) {
  if (rm.dim() != algebra.space().dim()) throw DimensionError("invariance defect: dimension mismatch");
  const Matrix r = to_operator(rm).matrix();
  double worst = 0.0;
  for (int a = 0; a < algebra.dim(); ++a)
    worst = std::max(worst, lie_action_operator(algebra.derivation(a), r).norm());
  return worst;
}

QkRatio hat_ratio_qk(const CurvatureTensor& rm, int m) {
  const auto space = EuclideanSpace::quaternion_kaehler(m);
  const auto algebra = cached_algebra(StructureKind::quaternion_kaehler, m);
  const CurvatureDecomposition d = qk_decompose(rm, space);
  QkRatio q;
  q.r0_norm_sq = d.part("hyperkaehler_part").norm_sq() / 4.0;
  q.hat_norm_sq = hat_norm_sq_operator(rm, *algebra);
  const double scale = 1.0 + rm.norm_sq() / 4.0;
  if (q.r0_norm_sq <= 1e-18 * scale) {
    if (q.hat_norm_sq > 1e-9 * scale)
      throw DomainError("R_0 vanishes but the hat norm does not (" + std::to_string(q.hat_norm_sq) +
                        ")");
    q.pure_multiple = true;
    return q;
  }
  q.ratio = q.hat_norm_sq / q.r0_norm_sq;
  return q;
}

std::vector<ClosedForm> wolf_hat_closed_forms(int m) {
  const double x = m;
  return {{"36m^2(m-1)", 36.0 * x * x * (x - 1.0)},
          {"12m(m-1)(3m+4)", 12.0 * x * (x - 1.0) * (3.0 * x + 4.0)}};
}

int Adjudication::match_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const Entry& e) { return e.match; }));
}

std::optional<std::string> Adjudication::verdict() const {
  if (match_count() != 1) return std::nullopt;
  for (const auto& e : entries)
    if (e.match) return e.form.name;
  return std::nullopt;
}

Adjudication adjudicate(double brute_force, const std::vector<ClosedForm>& forms, double rel_tol) {
  Adjudication a;
  a.brute_force = brute_force;
  for (const auto& f : forms) {
    const double err = std::abs(brute_force - f.value) / std::max(std::abs(f.value), 1e-300);
    a.entries.push_back({f, err, err <= rel_tol});
  }
  return a;
}

Matrix positive_model(const HolonomyAlgebra& algebra) {
  const EuclideanSpace& space = algebra.space();
  CurvatureTensor model = [&] {
    switch (algebra.kind()) {
      case StructureKind::kaehler:
        return const_hol_shape(space.structure_size());
      case StructureKind::quaternion_kaehler:
        return hp(space.structure_size());
      default:
        return sphere(space.dim());
    }
  }();
  return project(to_operator(model), algebra).matrix();
}

std::vector<double> ascending_eigenvalues(const Matrix& s) {
  const SpectralData spec = symmetric_eigen(s);
  return {spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size()};
}

double two_nonnegative_shift(const Matrix& s, const Matrix& model) {
  if (s.rows() < 2) throw DomainError("2-nonnegativity needs at least two eigenvalues");
  auto two_sum = [&](double t) {
    const auto e = ascending_eigenvalues(s + t * model);
    return e[0] + e[1];
  };
  if (two_sum(0.0) >= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  int grow = 0;
  while (two_sum(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 60) throw ConvergenceError("model does not dominate the sample");
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (two_sum(mid) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace curvlab
