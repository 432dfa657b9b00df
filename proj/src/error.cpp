#include "clucmp/error.hpp"

namespace clucmp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::empty_input: return "EmptyInput";
    case Errc::element_set_mismatch: return "ElementSetMismatch";
    case Errc::too_few_elements: return "TooFewElements";
    case Errc::order_exceeds_n: return "OrderExceedsN";
    case Errc::order_too_small: return "OrderTooSmall";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::not_a_distribution: return "NotADistribution";
    case Errc::invalid_table: return "InvalidTable";
    case Errc::degenerate_ari: return "DegenerateARI";
    case Errc::degenerate_jaccard: return "DegenerateJaccard";
    case Errc::degenerate_fm: return "DegenerateFM";
    case Errc::degenerate_nmi: return "DegenerateNMI";
    case Errc::degenerate_normalization: return "DegenerateNormalization";
    case Errc::zero_collision: return "ZeroCollision";
    case Errc::bootstrap_unstable: return "BootstrapUnstable";
    case Errc::parse_error: return "ParseError";
    case Errc::usage_error: return "UsageError";
  }
  return "Unknown";
}

}  // namespace clucmp
