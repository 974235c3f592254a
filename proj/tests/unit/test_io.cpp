#include <gtest/gtest.h>

#include <sstream>

#include "curvlab/curvlab.hpp"

using namespace curvlab;

TEST(Io, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(std::nan("")), "null");
}

TEST(Io, RoundTripIsExact) {
  for (const auto& [rm, kind] : {std::pair{hp(2), StructureKind::quaternion_kaehler},
                                  std::pair{const_hol(2, 3.0), StructureKind::kaehler},
                                  std::pair{sphere(5, 0.3), StructureKind::generic}}) {
    std::stringstream ss;
    write_tensor_json(ss, rm, kind);
    const std::string first = ss.str();
    const TensorFile f = read_tensor_json(ss);
    EXPECT_EQ(f.space.kind(), kind);
    EXPECT_EQ(f.tensor.dim(), rm.dim());
    EXPECT_EQ((f.tensor - rm).tensor().max_abs(), 0.0);
    std::stringstream again;
    write_tensor_json(again, f.tensor, kind);
    EXPECT_EQ(again.str(), first);
  }
}

TEST(Io, MalformedInput) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_tensor_json(in);
  };
  EXPECT_THROW(read("{"), FormatError);
  EXPECT_THROW(read("[]"), FormatError);
  EXPECT_THROW(read(R"({"components": []})"), FormatError);
  EXPECT_THROW(read(R"({"n": 2, "components": [0, 0]})"), FormatError);
  EXPECT_THROW(read(R"({"n": 1, "structure": "g2", "components": [0]})"), FormatError);
  EXPECT_THROW(read(R"({"n": 3, "structure": "kaehler", "components": []})"), FormatError);
  EXPECT_THROW(read(R"({"n": 1, "components": ["x"]})"), FormatError);
  EXPECT_NO_THROW(read(R"({"n": 1, "components": [0]})"));
}

TEST(Io, SymmetryViolationReportsResidual) {
  std::string comps;
  for (int i = 0; i < 16; ++i) comps += (i ? "," : "") + std::string(i == 3 ? "1" : "0");
  std::istringstream in(R"({"n": 2, "structure": "generic", "components": [)" + comps + "]}");
  try {
    read_tensor_json(in);
    FAIL();
  } catch (const SymmetryError& e) {
    EXPECT_GT(e.residual(), 0.5);
  }
}

TEST(Io, MissingFile) {
  EXPECT_THROW(load_tensor_file("/nonexistent/tensor.json"), FormatError);
}
