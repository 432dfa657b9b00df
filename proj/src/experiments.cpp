#include "clucmp/experiments.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "clucmp/format.hpp"
#include "clucmp/parallel.hpp"

namespace clucmp {

std::string_view scenario_name(Scenario s) noexcept {
  switch (s) {
    case Scenario::balanced: return "balanced";
    case Scenario::small_small: return "small_small";
    case Scenario::big_small: return "big_small";
  }
  return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::balanced, Scenario::small_small, Scenario::big_small})
    if (scenario_name(s) == name) return s;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> scenario_sizes(Scenario s, std::size_t n) {
  if (s == Scenario::balanced) {
    if (n < 2 || n % 2 != 0) throw Error(Errc::usage_error, "balanced scenario needs an even N >= 2");
    return {n / 2, n / 2};
  }
  if (n < 10 || n % 10 != 0) throw Error(Errc::usage_error, "unbalanced scenarios need N divisible by 10");
  return {n / 10 * 8, n / 10, n / 10};
}

}  // namespace

Clustering scenario_clustering(Scenario s, std::size_t n) {
  const auto sizes = scenario_sizes(s, n);
  std::vector<std::string> ids;
  std::vector<std::size_t> membership;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    labels.push_back(std::to_string(c));
    for (std::size_t k = 0; k < sizes[c]; ++k) {
      ids.push_back(std::to_string(ids.size()));
      membership.push_back(c);
    }
  }
  return Clustering(std::move(ids), std::move(membership), std::move(labels));
}

std::pair<std::size_t, std::size_t> exchanged_clusters(Scenario s) noexcept {
  switch (s) {
    case Scenario::balanced: return {0, 1};
    case Scenario::small_small: return {1, 2};
    case Scenario::big_small: return {0, 1};
  }
  return {0, 1};
}

std::size_t exchange_count(Scenario s, std::size_t n, double eps) {
  if (!(eps >= 0.0 && eps <= 0.5)) throw Error(Errc::usage_error, "exchange fraction must lie in [0, 0.5]");
  const auto sizes = scenario_sizes(s, n);
  const auto [c1, c2] = exchanged_clusters(s);
  const std::size_t smaller = std::min(sizes[c1], sizes[c2]);
  // the slack absorbs grid values such as 0.35 = 0.35000000000000003 - 1 ulp
  const auto k = static_cast<std::size_t>(std::floor(eps * static_cast<double>(smaller) + 1e-9));
  return std::min(k, smaller);
}

std::pair<Clustering, Clustering> gen_exchange_pair(Scenario s, std::size_t n, double eps, rng::Engine& gen) {
  Clustering a = scenario_clustering(s, n);
  const std::size_t k = exchange_count(s, n, eps);
  const auto [c1, c2] = exchanged_clusters(s);

  std::vector<std::size_t> members1, members2;
  for (std::size_t e = 0; e < a.n_elements(); ++e) {
    if (a.membership()[e] == c1) members1.push_back(e);
    if (a.membership()[e] == c2) members2.push_back(e);
  }
  const auto pick1 = rng::sample_without_replacement(gen, members1.size(), k);
  const auto pick2 = rng::sample_without_replacement(gen, members2.size(), k);

  std::vector<std::size_t> membership = a.membership();
  for (std::size_t i = 0; i < k; ++i) {
    membership[members1[pick1[i]]] = c2;
    membership[members2[pick2[i]]] = c1;
  }
  Clustering b(a.element_ids(), std::move(membership), a.cluster_labels());
  return {std::move(a), std::move(b)};
}

double normalize_by_self(Measure m, const Clustering& a, const Clustering& b, const MeasureOptions& opts) {
  const bool self_normalized = is_information_measure(m);
  const double s_ab = evaluate(m, contingency(a, b), opts);
  if (!self_normalized) return s_ab;
  const double s_aa = evaluate(m, contingency(a, a), opts);
  const double s_bb = evaluate(m, contingency(b, b), opts);
  const double denom = (s_aa + s_bb) / 2.0;
  if (!(denom > 0.0))
    throw Error(Errc::degenerate_normalization,
                std::string("self-similarity of ") + std::string(measure_name(m)) + " is zero");
  return s_ab / denom;
}

std::vector<double> parse_eps_grid(std::string_view text) {
  auto bad = [&] { return Error(Errc::usage_error, "invalid eps grid '" + std::string(text) + "'"); };
  double parts[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) throw bad();
    const std::string field(text.substr(pos, end - pos));
    char* stop = nullptr;
    parts[i] = std::strtod(field.c_str(), &stop);
    if (field.empty() || stop != field.c_str() + field.size() || !std::isfinite(parts[i])) throw bad();
    pos = end + 1;
  }
  const auto [start, stop, step] = parts;
  if (!(step > 0.0) || start > stop || start < 0.0 || stop > 0.5 + 1e-12) throw bad();
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  for (std::size_t i = 0; i < count; ++i) {
    // snap to 12 decimals so 3 * 0.05 prints as 0.15
    const double e = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    grid.push_back(std::min(e, 0.5));
  }
  return grid;
}

std::vector<double> default_eps_grid() { return parse_eps_grid("0:0.5:0.05"); }

void validate(const ExperimentConfig& cfg) {
  scenario_sizes(cfg.scenario, cfg.n_elements);
  if (cfg.n_trials == 0) throw Error(Errc::usage_error, "need at least one trial");
  if (cfg.eps_grid.empty()) throw Error(Errc::usage_error, "empty eps grid");
  for (double e : cfg.eps_grid)
    if (!(e >= 0.0 && e <= 0.5)) throw Error(Errc::usage_error, "eps values must lie in [0, 0.5]");
  if (cfg.measures.empty()) throw Error(Errc::usage_error, "no measures requested");
  for (Measure m : cfg.measures)
    if (m == Measure::vi) throw Error(Errc::usage_error, "vi is a distance and has no self-similarity scale");
}

const ExperimentCell& ExperimentResult::cell(Measure m, std::size_t eps_index) const {
  for (std::size_t k = 0; k < config.measures.size(); ++k)
    if (config.measures[k] == m) return cells.at(k * config.eps_grid.size() + eps_index);
  throw Error(Errc::usage_error, "measure not part of this experiment");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n_eps = cfg.eps_grid.size();
  const std::size_t n_meas = cfg.measures.size();
  const std::size_t n_trials = cfg.n_trials;

  // values[(e * n_trials + t) * n_meas + m]
  std::vector<double> values(n_eps * n_trials * n_meas, std::numeric_limits<double>::quiet_NaN());
  parallel_for(n_eps * n_trials, cfg.threads, [&](std::size_t job) {
    const std::size_t e = job / n_trials, t = job % n_trials;
    auto gen = rng::stream(cfg.seed, {e, t});
    const auto [a, b] = gen_exchange_pair(cfg.scenario, cfg.n_elements, cfg.eps_grid[e], gen);
    for (std::size_t m = 0; m < n_meas; ++m) {
      try {
        values[job * n_meas + m] = normalize_by_self(cfg.measures[m], a, b, cfg.options);
      } catch (const Error& err) {
        if (!err.degenerate()) throw;
      }
    }
  });

  ExperimentResult out;
  out.config = cfg;
  out.version = std::string(version());
  for (std::size_t m = 0; m < n_meas; ++m)
    for (std::size_t e = 0; e < n_eps; ++e) {
      ExperimentCell c{cfg.measures[m], cfg.eps_grid[e]};
      double sum = 0;
      for (std::size_t t = 0; t < n_trials; ++t) {
        const double v = values[(e * n_trials + t) * n_meas + m];
        if (std::isnan(v)) continue;
        sum += v;
        ++c.n_valid;
      }
      c.n_missing = n_trials - c.n_valid;
      c.flagged = 10 * c.n_missing > n_trials;
      c.mean = c.n_valid > 0 ? sum / static_cast<double>(c.n_valid) : std::numeric_limits<double>::quiet_NaN();
      if (c.n_valid > 1) {
        double ss = 0;
        for (std::size_t t = 0; t < n_trials; ++t) {
          const double v = values[(e * n_trials + t) * n_meas + m];
          if (!std::isnan(v)) ss += (v - c.mean) * (v - c.mean);
        }
        const auto nv = static_cast<double>(c.n_valid);
        c.sem = std::sqrt(ss / (nv - 1.0)) / std::sqrt(nv);
      }
      c.band = 2.0 * c.sem;
      out.cells.push_back(c);
    }
  return out;
}

void write_csv(std::ostream& os, const ExperimentResult& r) {
  os << "scenario,measure,eps,mean,sem,n_trials\n";
  for (const auto& c : r.cells)
    os << scenario_name(r.config.scenario) << ',' << measure_name(c.measure) << ',' << format_number(c.eps) << ','
       << format_number(c.mean) << ',' << format_number(c.sem) << ',' << c.n_valid << '\n';
}

namespace {

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x);
}

std::string_view mode_name(CollisionMode m) {
  return m == CollisionMode::with_replacement ? "with" : "without";
}

}  // namespace

std::string to_json(const ExperimentResult& r) {
  using json = nlohmann::ordered_json;
  const auto& cfg = r.config;
  json doc;
  doc["schema"] = "clucmp.experiment/1";
  doc["version"] = r.version;
  json config;
  config["scenario"] = scenario_name(cfg.scenario);
  config["n"] = cfg.n_elements;
  config["trials"] = cfg.n_trials;
  config["seed"] = cfg.seed;
  config["mode"] = mode_name(cfg.options.mode);
  config["lambda"] = number(cfg.options.lambda);
  json grid = json::array();
  for (double e : cfg.eps_grid) grid.push_back(number(e));
  config["eps_grid"] = grid;
  json measures = json::array();
  for (Measure m : cfg.measures) measures.push_back(measure_name(m));
  config["measures"] = measures;
  doc["config"] = config;

  json curves = json::array();
  for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
    json points = json::array();
    for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e) {
      const auto& c = r.cells[m * cfg.eps_grid.size() + e];
      json p;
      p["eps"] = number(c.eps);
      p["mean"] = number(c.mean);
      p["sem"] = number(c.sem);
      p["band"] = number(c.band);
      p["n_valid"] = c.n_valid;
      p["n_missing"] = c.n_missing;
      p["flagged"] = c.flagged;
      points.push_back(p);
    }
    json curve;
    curve["measure"] = measure_name(cfg.measures[m]);
    curve["points"] = points;
    curves.push_back(curve);
  }
  doc["curves"] = curves;
  return doc.dump(2) + "\n";
}

}  // namespace clucmp
