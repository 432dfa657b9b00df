#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clucmp {

enum class Errc {
  duplicate_element,
  empty_input,
  element_set_mismatch,
  too_few_elements,
  order_exceeds_n,
  order_too_small,
  invalid_order,
  not_a_distribution,
  invalid_table,
  degenerate_ari,
  degenerate_jaccard,
  degenerate_fm,
  degenerate_nmi,
  degenerate_normalization,
  zero_collision,
  bootstrap_unstable,
  parse_error,
  usage_error,
};

std::string_view errc_name(Errc code) noexcept;

// A measure that is undefined for the given input (zero denominator, empty
// collision sum, ...). Callers that sweep over many tables report these
// in-band instead of aborting.
constexpr bool is_degenerate(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_ari:
    case Errc::degenerate_jaccard:
    case Errc::degenerate_fm:
    case Errc::degenerate_nmi:
    case Errc::degenerate_normalization:
    case Errc::zero_collision:
    case Errc::too_few_elements:
    case Errc::order_exceeds_n:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool degenerate() const noexcept { return is_degenerate(code_); }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace clucmp
