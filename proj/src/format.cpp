#include "clucmp/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifndef CLUCMP_VERSION
#define CLUCMP_VERSION "unknown"
#endif

namespace clucmp {

std::string_view version() noexcept { return CLUCMP_VERSION; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  const std::string s = format_number(x);
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace clucmp
