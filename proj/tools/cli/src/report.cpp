#include "curvlab_cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvlab/io.hpp"

namespace curvlab::cli {

void Report::check_relative(const std::string& name, Json inputs, double expected, double actual,
                            double tol) {
  const double scale = expected == 0.0 ? 1.0 : std::abs(expected);
  const bool ok = std::isfinite(actual) && std::abs(actual - expected) <= tol * scale;
  add({name, std::move(inputs), expected, actual, tol, ok});
}

void Report::check_absolute(const std::string& name, Json inputs, double expected, double actual,
                            double tol) {
  const bool ok = std::isfinite(actual) && std::abs(actual - expected) <= tol;
  add({name, std::move(inputs), expected, actual, tol, ok});
}

void Report::check_bound(const std::string& name, Json inputs, double actual, double bound) {
  const bool ok = std::isfinite(actual) && actual <= bound;
  add({name, std::move(inputs), "<= tolerance", actual, bound, ok});
}

void Report::check(const std::string& name, Json inputs, Json expected, Json actual, bool pass,
                   double tol) {
  add({name, std::move(inputs), std::move(expected), std::move(actual), tol, pass});
}

int Report::passed_count() const {
  return static_cast<int>(
      std::count_if(records_.begin(), records_.end(), [](const Record& r) { return r.pass; }));
}

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command_;
  j["pass"] = passed();
  j["summary"] = {{"total", records_.size()}, {"passed", passed_count()}, {"failed", failed_count()}};
  Json recs = Json::array();
  for (const auto& r : records_)
    recs.push_back({{"name", r.name},
                    {"inputs", r.inputs},
                    {"expected", r.expected},
                    {"actual", r.actual},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  j["records"] = std::move(recs);
  if (!data_.empty()) j["data"] = data_;
  if (has_table()) {
    Json rows = Json::array();
    for (const auto& row : rows_) rows.push_back(Json(row));
    j["table"] = {{"columns", columns_}, {"rows", std::move(rows)}};
  }
  return j;
}

namespace {

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_null())
    s = "";
  else
    s = dump(v, -1);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(std::ostringstream& out, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  const std::string pad = pretty ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = pretty ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = pretty ? "\n" : "";
  const char* sep = pretty ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad << Json(it.key()).dump() << sep;
        emit(out, it.value(), indent, depth + 1);
      }
      out << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(),
                                     [](const Json& e) { return e.is_structured(); });
      if (flat || !pretty) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << (pretty ? ", " : ",");
          emit(out, j[i], indent, depth + 1);
        }
        out << ']';
        return;
      }
      out << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',' << nl;
        out << pad;
        emit(out, j[i], indent, depth + 1);
      }
      out << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<Json>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
  };
  if (has_table()) {
    line(std::vector<Json>(columns_.begin(), columns_.end()));
    for (const auto& row : rows_) line(row);
    return out.str();
  }
  line({"name", "inputs", "expected", "actual", "tolerance", "pass"});
  for (const auto& r : records_) line({r.name, r.inputs, r.expected, r.actual, r.tolerance, r.pass});
  return out.str();
}

std::string dump(const Json& j, int indent) {
  std::ostringstream out;
  emit(out, j, indent, 0);
  return out.str();
}

}  // namespace curvlab::cli
