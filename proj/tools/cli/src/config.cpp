#include "curvlab_cli/config.hpp"

#include <charconv>

namespace curvlab::cli {

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid range '" + whole + "'");
  return v;
}

}  // namespace

std::vector<int> IntRange::values() const {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), text);
    r.hi = parse_int(std::string_view(text).substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

}  // namespace curvlab::cli
