#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clucmp/measures.hpp"
#include "clucmp/residuals.hpp"

namespace clucmp {

struct CompareOptions {
  MeasureOptions measure;
  std::size_t bootstrap = 0;  ///< replicates; 0 disables
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct MeasureEntry {
  std::string id;
  std::optional<double> value;
  bool degenerate = false;
  std::string reason;  ///< error name when degenerate
  bool convergence_warning = false;
  std::optional<BootstrapResult> bootstrap;
  std::string bootstrap_error;
  std::optional<RIDecomposition> decomposition;  ///< only for ri_decomp
};

/// One entry per requested measure, in request order.
struct MeasureReport {
  std::size_t n_elements = 0;
  std::vector<Count> sizes_a;
  std::vector<Count> sizes_b;
  CompareOptions options;
  std::vector<MeasureEntry> entries;
};

/// Ids accepted by compare: every Measure name plus "ri_decomp".
bool is_compare_measure(const std::string& id);
std::vector<std::string> default_compare_measures();

MeasureReport compare(const Clustering& a, const Clustering& b, const std::vector<std::string>& measures,
                      const CompareOptions& opts);

std::string to_json(const MeasureReport& r);
void write_csv(std::ostream& os, const MeasureReport& r);

/// Residual matrix as CSV: header "cluster,<B labels>", one row per A cluster.
void write_residual_csv(std::ostream& os, const ContingencyTable& t, const Matrix<double>& m);

}  // namespace clucmp
