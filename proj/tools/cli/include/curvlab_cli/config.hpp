#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/errors.hpp"
#include "curvlab/euclid.hpp"

namespace curvlab::cli {

/// Bad flags or parameter combinations; mapped to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Inclusive integer range written "a..b" or "a".
struct IntRange {
  int lo = 0;
  int hi = 0;
  std::vector<int> values() const;
};
IntRange parse_range(const std::string& text);

enum class Command { verify, spectrum, decompose, sample, export_tensor };
enum class OutputFormat { json, csv };

struct RunConfig {
  Command command = Command::verify;
  std::string suite;
  std::string model;
  std::optional<StructureKind> holonomy;
  std::optional<IntRange> m, n, p, q;
  int trials = 0;  // 0 selects the suite default
  std::uint64_t seed = 42;
  std::optional<double> tol;
  OutputFormat format = OutputFormat::json;
  std::string out;
  std::string input;
  std::string condition = "none";
  std::string criterion = "auto";
  std::optional<double> radius;
  std::optional<double> scal;

  int trials_or(int fallback) const { return trials > 0 ? trials : fallback; }
  double tol_or(double fallback) const { return tol.value_or(fallback); }
  std::vector<int> m_or(IntRange fallback) const { return m.value_or(fallback).values(); }
  std::vector<int> n_or(IntRange fallback) const { return n.value_or(fallback).values(); }
};

/// Per-trial generator seed.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return seed ^ trial; }

}  // namespace curvlab::cli
