#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clucmp/info.hpp"
#include "clucmp/partition.hpp"
#include "clucmp/renyi.hpp"

namespace clucmp {

/// Scalar similarity measures addressable by id on the command line.
enum class Measure { ri, ari, jaccard, fm, mi, vi, nmi, chi2, i2, i3, i4 };

std::string_view measure_name(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view name);
const std::vector<Measure>& all_measures();

/// Information-valued (nats or bits) rather than a dimensionless index.
bool is_information_measure(Measure m) noexcept;

struct MeasureOptions {
  LogBase base = LogBase::natural;
  CollisionMode mode = CollisionMode::without_replacement;
  double lambda = 0.0;
};

/// Throws Error with a degenerate code when the measure is undefined on t.
double evaluate(Measure m, const ContingencyTable& t, const MeasureOptions& opts = {});

struct BootstrapResult {
  double mean = 0;
  double std_error = 0;  ///< replicate standard deviation, n-1 denominator
  std::size_t used = 0;
  std::size_t skipped = 0;
};

/// Nonparametric bootstrap over elements: each replicate draws N elements
/// with replacement, keeping each element's pair of labels, and recomputes
/// the measure. Replicate r uses the stream derived from (seed, r), so the
/// result does not depend on `threads`.
BootstrapResult bootstrap_variance(const Clustering& a, const Clustering& b, Measure m,
                                   const MeasureOptions& opts, std::size_t n_boot, std::uint64_t seed,
                                   unsigned threads = 1);

}  // namespace clucmp
