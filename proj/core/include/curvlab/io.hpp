#pragma once

// JSON tensor files: {"n": int, "structure": "generic"|"kaehler"|"qk",
// "components": [n^4 numbers, row-major]}.

#include <iosfwd>
#include <string>

#include "curvlab/tensor.hpp"

namespace curvlab {

struct TensorFile {
  EuclideanSpace space;
  CurvatureTensor tensor;
};

/// %.17g; non-finite values become null.
std::string format_double(double v);

void write_tensor_json(std::ostream& out, const CurvatureTensor& rm, StructureKind kind);
/// Throws FormatError for malformed input and SymmetryError (with the
/// residual) when the components are not a curvature tensor to `tol`.
TensorFile read_tensor_json(std::istream& in, double tol = 1e-10);

void save_tensor_file(const std::string& path, const CurvatureTensor& rm, StructureKind kind);
TensorFile load_tensor_file(const std::string& path, double tol = 1e-10);

}  // namespace curvlab
