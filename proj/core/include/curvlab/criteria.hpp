#pragma once

// Curvature terms g(R(T^g), T^g), the hat-norm identities they rest on, and
// weighted eigenvalue criteria.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvlab/holonomy.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

/// Both evaluations of g(R(T^g), T^g) for an operator restricted to `algebra`.
struct CurvatureTerm {
  double eigen_route = 0.0;   // sum_a lambda_a |X'_a T|^2 over the rotated eigenbasis
  double direct_route = 0.0;  // sum_{a,b} R_ab <X_a T, X_b T>
};

/// Full component norm on T.
CurvatureTerm curvature_term(const CurvatureOperator& restricted, const Tensor& t,
                             const HolonomyAlgebra& algebra);
/// Operator convention for T = R: norms of X_a R are Frobenius norms of the
/// induced operators, a quarter of the component norms.
CurvatureTerm curvature_term_operator(const CurvatureOperator& restricted,
                                      const CurvatureTensor& rm, const HolonomyAlgebra& algebra);

/// Structure constants g([E_a, E_b], E_c) in the eigenbasis {E_a} of `restricted`.
struct EigenFrame {
  SpectralData spectrum;
  std::vector<double> constants;  // d^3, row-major
  int dim = 0;
  double operator()(int a, int b, int c) const {
    const auto d = static_cast<std::size_t>(dim);
    return constants[(static_cast<std::size_t>(a) * d + b) * d + c];
  }
};
EigenFrame eigen_frame(const CurvatureOperator& restricted, const HolonomyAlgebra& algebra);

struct HatNormFormula {
  double total = 0.0;
  /// |E_c R|^2 = 2 sum_{a<b} (lambda_a - lambda_b)^2 g([E_c, E_a], E_b)^2, per eigenvector c.
  std::vector<double> per_element;
};
/// Operator convention; equals hat_norm_sq_operator for R in Sym^2_B(g).
HatNormFormula hat_norm_formula(const CurvatureOperator& restricted, const HolonomyAlgebra& algebra);

/// a (b - c)^2 + b (c - a)^2 + c (a - b)^2.
double lambda_tripod(double a, double b, double c);

/// 2 sum_{a<b<c} Lambda_abc g([E_a, E_b], E_c)^2; equals curvature_term_operator.
double curvature_term_self(const CurvatureOperator& restricted, const HolonomyAlgebra& algebra);

/// lambda_1 + ... + lambda_k + w lambda_{k+1}.
struct CriterionSpec {
  int k = 1;
  double w = 0.0;

  /// k = floor((n-1)/2), w = (1 + (-1)^n)/4.
  static CriterionSpec weyl(int n);
  /// k = floor((m+1)/2), w = (1 + (-1)^m)/4.
  static CriterionSpec kaehler(int m);
  /// k = floor((m+1)/2), w = (5 + 3(-1)^m)/12.
  static CriterionSpec qk(int m);
  /// Threshold derived from |R^g|^2 = c |R_0|^2 with R_0 the part the criterion
  /// acts on: k + w = c / 8. Reproduces weyl(n) at c = 4(n-1) and kaehler(m)
  /// at c = 4(m+1). c is given as a rational num / den.
  static CriterionSpec from_hat_constant(long num, long den = 1);
};

struct CriterionResult {
  double value = 0.0;
  bool satisfied = false;  // value >= 0
  bool strict = false;     // value > 0
};
/// Throws DomainError for a non-ascending list or when k (+1 if w > 0) exceeds its length.
CriterionResult weighted_criterion(const std::vector<double>& ascending, const CriterionSpec& spec);
bool k_nonnegative(const std::vector<double>& ascending, int k);

/// max_a |X_a R| in the operator norm; zero iff R is invariant under the algebra.
double invariance_defect(const CurvatureTensor& rm, const HolonomyAlgebra& algebra);

struct QkRatio {
  double hat_norm_sq = 0.0;  // |R^{sp(m)+sp(1)}|^2, operator convention
  double r0_norm_sq = 0.0;   // |R_0|^2, operator convention
  double ratio = 0.0;        // hat_norm_sq / r0_norm_sq; 0 when pure_multiple
  bool pure_multiple = false;
};
/// Throws DomainError if R_0 vanishes while the hat norm does not.
QkRatio hat_ratio_qk(const CurvatureTensor& rm, int m);

/// Closed forms offered for |R_W^{sp(m)+sp(1)}|^2 on the Wolf space.
struct ClosedForm {
  std::string name;
  double value = 0.0;
};
std::vector<ClosedForm> wolf_hat_closed_forms(int m);

struct Adjudication {
  double brute_force = 0.0;
  struct Entry {
    ClosedForm form;
    double relative_error = 0.0;
    bool match = false;
  };
  std::vector<Entry> entries;
  int match_count() const;
  /// Name of the unique match, if exactly one form matches.
  std::optional<std::string> verdict() const;
};
Adjudication adjudicate(double brute_force, const std::vector<ClosedForm>& forms, double rel_tol);

/// Restricted operator of a model tensor that is positive definite on the
/// algebra: g o g for so(n), const_hol_shape for u(m), R_HP for sp(m)+sp(1).
Matrix positive_model(const HolonomyAlgebra& algebra);

/// Smallest t >= 0 (bisection, 60 steps) with lambda_1 + lambda_2 of S + t M >= 0.
double two_nonnegative_shift(const Matrix& s, const Matrix& model);

/// Ascending eigenvalues as a std::vector.
std::vector<double> ascending_eigenvalues(const Matrix& s);

}  // namespace curvlab
