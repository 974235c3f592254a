#include "curvlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace curvlab {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_tensor_json(std::ostream& out, const CurvatureTensor& rm, StructureKind kind) {
  out << "{\"n\": " << rm.dim() << ", \"structure\": \"" << to_string(kind)
      << "\", \"components\": [";
  const auto data = rm.tensor().data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i) out << (i % static_cast<std::size_t>(rm.dim()) == 0 ? ",\n" : ", ");
    out << format_double(data[i]);
  }
  out << "]}\n";
}

TensorFile read_tensor_json(std::istream& in, double tol) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("tensor file must hold a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw FormatError("missing integer field 'n'");
  if (!doc.contains("components") || !doc["components"].is_array())
    throw FormatError("missing array field 'components'");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 64) throw FormatError("field 'n' out of range");
  const std::string structure = doc.value("structure", std::string("generic"));
  StructureKind kind;
  try {
    kind = structure_kind_from_string(structure);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
  int size = n;
  if (kind == StructureKind::kaehler) {
    if (n % 2) throw FormatError("kaehler structure needs even n");
    size = n / 2;
  } else if (kind == StructureKind::quaternion_kaehler) {
    if (n % 4 || n < 8) throw FormatError("qk structure needs n = 4m with m >= 2");
    size = n / 4;
  }
  const auto& comps = doc["components"];
  const std::size_t expected = static_cast<std::size_t>(n) * n * n * n;
  if (comps.size() != expected)
    throw FormatError("expected " + std::to_string(expected) + " components, got " +
                      std::to_string(comps.size()));
  Tensor t(4, n);
  auto data = t.data();
  for (std::size_t i = 0; i < expected; ++i) {
    if (!comps[i].is_number()) throw FormatError("component " + std::to_string(i) + " is not a number");
    data[i] = comps[i].get<double>();
  }
  return {EuclideanSpace::make(kind, size), CurvatureTensor(std::move(t), tol)};
}

void save_tensor_file(const std::string& path, const CurvatureTensor& rm, StructureKind kind) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_tensor_json(out, rm, kind);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

TensorFile load_tensor_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_tensor_json(in, tol);
}

}  // namespace curvlab
