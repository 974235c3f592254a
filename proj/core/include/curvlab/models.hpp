#pragma once

// Curvature tensors of model symmetric spaces in the conventions of euclid.hpp.

#include <cmath>

#include "curvlab/tensor.hpp"

namespace curvlab {

/// Round sphere of the given radius: (1 / (2 r^2)) g o g.
CurvatureTensor sphere(int n, double radius = 1.0 / std::sqrt(2.0));

/// (1/2) g o g + (1/2) omega o omega + 2 omega (x) omega on R^{2m}, the
/// constant holomorphic sectional curvature shape with scal = 4m(m+1).
CurvatureTensor const_hol_shape(int m);
/// const_hol_shape scaled to the requested scalar curvature.
CurvatureTensor const_hol(int m, double scal);

/// Quaternionic projective space on R^{4m}:
/// R(X ^ Y) = X ^ Y + IX ^ IY + JX ^ JY + KX ^ KY + 2 sum_L g(X ^ Y, omega_L) omega_L.
CurvatureTensor hp(int m);

/// Grassmannian of p-planes in R^{p+q}; tangent space R^{q x p} with E_ab at
/// index a * p + b, metric tr(X^T Y) and
/// R(X,Y,Z,W) = tr(-Z^T Y X^T W - X^T Y Z^T W + Z^T X Y^T W + Y^T X Z^T W).
CurvatureTensor grassmannian(int p, int q);

/// Wolf space of real dimension 4m: the 4 x m Grassmannian tangent space
/// mapped to R^{4m} by X -> sum_j (x_1j f_j + x_2j I f_j + x_3j J f_j + x_4j K f_j).
CurvatureTensor wolf(int m);

/// Largest |Rm(JX, JY, Z, W) - Rm(X, Y, Z, W)|.
double kaehler_symmetry_residual(const Tensor& rm, const Matrix& j);

}  // namespace curvlab
