#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clucmp/measures.hpp"
#include "clucmp/random.hpp"

namespace clucmp {

/// balanced: two clusters of N/2. small_small and big_small start from
/// sizes [0.8N, 0.1N, 0.1N] and exchange members between the two small
/// clusters, or between the big cluster and the first small one.
enum class Scenario { balanced, small_small, big_small };

std::string_view scenario_name(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name);

/// Base clustering of a scenario: element ids "0".."N-1", clusters in order.
Clustering scenario_clustering(Scenario s, std::size_t n);

/// The two clusters whose members are exchanged.
std::pair<std::size_t, std::size_t> exchanged_clusters(Scenario s) noexcept;

/// B is A with floor(eps * s) members of each exchanged cluster swapped,
/// s being the smaller of the two; sizes are preserved and eps = 0 gives B = A.
std::pair<Clustering, Clustering> gen_exchange_pair(Scenario s, std::size_t n, double eps, rng::Engine& gen);

/// Number of members swapped from each exchanged cluster.
std::size_t exchange_count(Scenario s, std::size_t n, double eps);

/// S(A,B) / ((S(A,A) + S(B,B)) / 2) for the information family (mi, i2, i3,
/// i4, chi2); measures that already score 1 at perfect agreement pass
/// through unchanged.
double normalize_by_self(Measure m, const Clustering& a, const Clustering& b, const MeasureOptions& opts = {});

/// Evenly spaced grid parsed from "start:stop:step" (stop included).
std::vector<double> parse_eps_grid(std::string_view text);

struct ExperimentConfig {
  Scenario scenario = Scenario::balanced;
  std::size_t n_elements = 1000;
  std::vector<double> eps_grid;
  std::size_t n_trials = 100;
  std::vector<Measure> measures{Measure::ri, Measure::ari, Measure::nmi, Measure::i2, Measure::i3, Measure::i4};
  std::uint64_t seed = 0;
  MeasureOptions options;
  unsigned threads = 1;  ///< does not affect results
};

/// Default grid 0, 0.05, ..., 0.5.
std::vector<double> default_eps_grid();

void validate(const ExperimentConfig& cfg);

struct ExperimentCell {
  Measure measure;
  double eps = 0;
  double mean = 0;
  double sem = 0;   ///< standard error of the mean, n-1 sample variance
  double band = 0;  ///< 2 * sem
  std::size_t n_valid = 0;
  std::size_t n_missing = 0;
  bool flagged = false;  ///< more than 10% of trials degenerate
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string version;
  std::vector<ExperimentCell> cells;  ///< measure-major, then ascending eps

  const ExperimentCell& cell(Measure m, std::size_t eps_index) const;
};

/// Trial (e, t) draws from the stream derived from (seed, e, t).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& os, const ExperimentResult& r);
std::string to_json(const ExperimentResult& r);

}  // namespace clucmp
