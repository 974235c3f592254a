#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace curvlab::cli {

using Json = nlohmann::ordered_json;

struct Record {
  std::string name;
  Json inputs = Json::object();
  Json expected;
  Json actual;
  double tolerance = 0.0;
  bool pass = false;
};

/// Ordered checks plus an optional table payload. Wall-clock time is kept
/// out of the serialized form so reports are reproducible byte for byte.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }
  const std::vector<Record>& records() const noexcept { return records_; }
  void add(Record r) { records_.push_back(std::move(r)); }

  /// |actual - expected| <= tol * |expected| (absolute when expected is 0).
  void check_relative(const std::string& name, Json inputs, double expected, double actual, double tol);
  /// |actual - expected| <= tol.
  void check_absolute(const std::string& name, Json inputs, double expected, double actual, double tol);
  /// actual <= bound.
  void check_bound(const std::string& name, Json inputs, double actual, double bound);
  /// Boolean check with free-form expected/actual descriptions.
  void check(const std::string& name, Json inputs, Json expected, Json actual, bool pass,
             double tol = 0.0);

  int passed_count() const;
  int failed_count() const { return static_cast<int>(records_.size()) - passed_count(); }
  bool passed() const { return failed_count() == 0; }

  Json& data() noexcept { return data_; }
  const Json& data() const noexcept { return data_; }

  void set_table(std::vector<std::string> columns) { columns_ = std::move(columns); }
  void add_row(std::vector<Json> row) { rows_.push_back(std::move(row)); }
  bool has_table() const noexcept { return !columns_.empty(); }

  Json to_json() const;
  /// The table when present, otherwise one row per record.
  std::string to_csv() const;

 private:
  std::string command_;
  std::vector<Record> records_;
  Json data_ = Json::object();
  std::vector<std::string> columns_;
  std::vector<std::vector<Json>> rows_;
};

/// JSON text with every floating-point number printed as %.17g.
std::string dump(const Json& j, int indent = 2);

}  // namespace curvlab::cli
