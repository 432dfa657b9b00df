#include "clucmp/measures.hpp"

#include <array>
#include <cmath>

#include "clucmp/pair_counts.hpp"
#include "clucmp/parallel.hpp"
#include "clucmp/random.hpp"
#include "clucmp/residuals.hpp"

namespace clucmp {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 11> kNames{{
    {Measure::ri, "ri"},
    {Measure::ari, "ari"},
    {Measure::jaccard, "jaccard"},
    {Measure::fm, "fm"},
    {Measure::mi, "mi"},
    {Measure::vi, "vi"},
    {Measure::nmi, "nmi"},
    {Measure::chi2, "chi2"},
    {Measure::i2, "i2"},
    {Measure::i3, "i3"},
    {Measure::i4, "i4"},
}};

}  // namespace

std::string_view measure_name(Measure m) noexcept {
  for (const auto& [id, name] : kNames)
    if (id == m) return name;
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (n == name) return id;
  return std::nullopt;
}

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> all = [] {
    std::vector<Measure> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

bool is_information_measure(Measure m) noexcept {
  switch (m) {
    case Measure::mi:
    case Measure::vi:
    case Measure::chi2:
    case Measure::i2:
    case Measure::i3:
    case Measure::i4:
      return true;
    default:
      return false;
  }
}

double evaluate(Measure m, const ContingencyTable& t, const MeasureOptions& opts) {
  const double to_base = base_factor<double>(opts.base);
  switch (m) {
    case Measure::ri: return rand_index(pair_counts(t));
    case Measure::ari: return adjusted_rand(pair_counts(t));
    case Measure::jaccard: return jaccard(pair_counts(t));
    case Measure::fm: return fowlkes_mallows(pair_counts(t));
    case Measure::mi: return mutual_information(joint_distribution<double>(t)) * to_base;
    case Measure::vi: return variation_of_information(joint_distribution<double>(t)) * to_base;
    case Measure::nmi: return normalized_mi(joint_distribution<double>(t));
    case Measure::chi2: return chi_square_approx(residuals<double>(t)) * to_base;
    case Measure::i2: return mi_ktuple(t, 2, opts.mode, opts.lambda).value * to_base;
    case Measure::i3: return mi_ktuple(t, 3, opts.mode, opts.lambda).value * to_base;
    case Measure::i4: return mi_ktuple(t, 4, opts.mode, opts.lambda).value * to_base;
  }
  throw Error(Errc::usage_error, "unknown measure");
}

BootstrapResult bootstrap_variance(const Clustering& a, const Clustering& b, Measure m,
                                   const MeasureOptions& opts, std::size_t n_boot, std::uint64_t seed,
                                   unsigned threads) {
  if (n_boot < 2) throw Error(Errc::usage_error, "bootstrap needs at least 2 replicates");
  const auto pairs = paired_memberships(a, b);
  const std::size_t n = pairs.size();

  std::vector<std::optional<double>> values(n_boot);
  parallel_for(n_boot, threads, [&](std::size_t r) {
    auto gen = rng::stream(seed, {r});
    std::vector<std::pair<std::size_t, std::size_t>> sample(n);
    for (auto& s : sample) s = pairs[rng::uniform_below(gen, n)];
    try {
      values[r] = evaluate(m, table_from_pairs(sample, a.n_clusters(), b.n_clusters()), opts);
    } catch (const Error& e) {
      if (!e.degenerate()) throw;
    }
  });

  BootstrapResult out;
  double sum = 0;
  for (const auto& v : values)
    if (v) {
      sum += *v;
      ++out.used;
    }
  out.skipped = n_boot - out.used;
  if (2 * out.skipped > n_boot || out.used < 2)
    throw Error(Errc::bootstrap_unstable, std::to_string(out.skipped) + " of " + std::to_string(n_boot) +
                                              " replicates were degenerate");
  out.mean = sum / static_cast<double>(out.used);
  double ss = 0;
  for (const auto& v : values)
    if (v) ss += (*v - out.mean) * (*v - out.mean);
  out.std_error = std::sqrt(ss / static_cast<double>(out.used - 1));
  return out;
}

}  // namespace clucmp
