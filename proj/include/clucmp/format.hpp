#pragma once

#include <string>
#include <string_view>

namespace clucmp {

std::string_view version() noexcept;

/// Number as written to every report: 10 significant digits, "nan"/"inf" spelled out.
std::string format_number(double x);

/// x rounded to 10 significant digits, for JSON emitters that print the
/// shortest round-trip form.
double round_significant(double x);

}  // namespace clucmp
