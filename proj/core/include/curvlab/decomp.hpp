#pragma once

// Orthogonal decompositions of curvature tensors by holonomy type.

#include <string>
#include <utility>
#include <vector>

#include "curvlab/euclid.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

struct DecompositionPart {
  std::string name;
  CurvatureTensor tensor;
};

struct CurvatureDecomposition {
  StructureKind kind = StructureKind::generic;
  std::vector<DecompositionPart> parts;
  /// Scalar multipliers in the order they were applied.
  std::vector<std::pair<std::string, double>> coefficients;

  /// Throws DomainError for unknown names.
  const CurvatureTensor& part(const std::string& name) const;
  double coefficient(const std::string& name) const;
  CurvatureTensor sum() const;
  /// max_{i<j} |<P_i, P_j>| in the full component inner product.
  double max_overlap() const;
};

/// Rm = scal / (2n(n-1)) g o g + 1/(n-2) g o Ric0 + W. Requires n >= 4.
/// Parts: scalar_part, ric0_part, weyl.
CurvatureDecomposition weyl_decompose(const CurvatureTensor& rm);

struct BochnerResult {
  CurvatureDecomposition decomposition;
  /// max |B_explicit - (Rm - scalar_part - ric0_part)|.
  double route_residual = 0.0;
};
/// Kaehler decomposition into scalar_part (constant holomorphic sectional
/// curvature), ric0_part and bochner. The Bochner part is evaluated from its
/// closed formula; the subtraction route is reported as route_residual.
/// Throws SymmetryError when Rm(JX, JY, Z, W) != Rm(X, Y, Z, W).
BochnerResult bochner_decompose(const CurvatureTensor& rm, const EuclideanSpace& space,
                                double tol = 1e-10);

/// R = scal / (16m(m+2)) R_HP + R_0. Parts: hp_multiple, hyperkaehler_part.
/// Throws SymmetryError when the operator has Frobenius mass above
/// `tol * (1 + |R|)` off sp(m) + sp(1).
CurvatureDecomposition qk_decompose(const CurvatureTensor& rm, const EuclideanSpace& space,
                                    double tol = 1e-8);

/// Dispatch on the structure of `space`.
CurvatureDecomposition decompose(const CurvatureTensor& rm, const EuclideanSpace& space);

}  // namespace curvlab
