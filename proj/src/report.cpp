#include "clucmp/report.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "clucmp/format.hpp"
#include "clucmp/io.hpp"

namespace clucmp {

bool is_compare_measure(const std::string& id) { return id == "ri_decomp" || parse_measure(id).has_value(); }

std::vector<std::string> default_compare_measures() {
  std::vector<std::string> ids;
  for (Measure m : all_measures()) ids.emplace_back(measure_name(m));
  ids.emplace_back("ri_decomp");
  return ids;
}

MeasureReport compare(const Clustering& a, const Clustering& b, const std::vector<std::string>& measures,
                      const CompareOptions& opts) {
  const ContingencyTable t = contingency(a, b);
  MeasureReport r;
  r.n_elements = a.n_elements();
  r.sizes_a = a.cluster_sizes();
  r.sizes_b = b.cluster_sizes();
  r.options = opts;

  for (const auto& id : measures) {
    if (!is_compare_measure(id)) throw Error(Errc::usage_error, "unknown measure '" + id + "'");
    MeasureEntry e;
    e.id = id;
    try {
      if (id == "ri_decomp") {
        e.decomposition = ri_decomposition(t);
        e.value = e.decomposition->total;
      } else {
        const Measure m = *parse_measure(id);
        e.value = evaluate(m, t, opts.measure);
        if (m == Measure::chi2) e.convergence_warning = residuals<double>(t).max_abs_epsilon() >= 1.0;
        if (opts.bootstrap > 0) {
          try {
            e.bootstrap = bootstrap_variance(a, b, m, opts.measure, opts.bootstrap, opts.seed, opts.threads);
          } catch (const Error& err) {
            if (err.code() != Errc::bootstrap_unstable) throw;
            e.bootstrap_error = std::string(errc_name(err.code()));
          }
        }
      }
    } catch (const Error& err) {
      if (!err.degenerate()) throw;
      e.value.reset();
      e.degenerate = true;
      e.reason = std::string(errc_name(err.code()));
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

namespace {

using json = nlohmann::ordered_json;

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x);
}

json number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

std::string_view base_name(LogBase b) { return b == LogBase::bits ? "bits" : "nats"; }
std::string_view mode_name(CollisionMode m) {
  return m == CollisionMode::with_replacement ? "with" : "without";
}

}  // namespace

std::string to_json(const MeasureReport& r) {
  json doc;
  doc["schema"] = "clucmp.compare/1";
  json input;
  input["n"] = r.n_elements;
  input["k_a"] = r.sizes_a.size();
  input["k_b"] = r.sizes_b.size();
  input["sizes_a"] = r.sizes_a;
  input["sizes_b"] = r.sizes_b;
  doc["input"] = input;
  json options;
  options["base"] = base_name(r.options.measure.base);
  options["mode"] = mode_name(r.options.measure.mode);
  options["lambda"] = number(r.options.measure.lambda);
  options["bootstrap"] = r.options.bootstrap;
  options["seed"] = r.options.seed;
  doc["options"] = options;

  json measures = json::object();
  for (const auto& e : r.entries) {
    json m;
    if (e.decomposition) {
      const auto& d = *e.decomposition;
      m["baseline"] = number(d.baseline);
      m["linear"] = number(d.linear);
      m["quadratic"] = number(d.quadratic);
      m["total"] = number(d.total);
      m["exact_ri"] = number(d.exact_ri);
      m["pair_baseline"] = number(d.pair_baseline);
      m["pair_residual"] = number(d.pair_residual);
    } else {
      m["value"] = number(e.value);
    }
    m["degenerate"] = e.degenerate;
    if (e.degenerate) m["reason"] = e.reason;
    if (e.convergence_warning) m["convergence_warning"] = true;
    if (e.bootstrap) {
      json b;
      b["mean"] = number(e.bootstrap->mean);
      b["std_error"] = number(e.bootstrap->std_error);
      b["used"] = e.bootstrap->used;
      b["skipped"] = e.bootstrap->skipped;
      m["bootstrap"] = b;
    } else if (!e.bootstrap_error.empty()) {
      m["bootstrap"] = json{{"error", e.bootstrap_error}};
    }
    measures[e.id] = m;
  }
  doc["measures"] = measures;
  return doc.dump(2) + "\n";
}

void write_csv(std::ostream& os, const MeasureReport& r) {
  os << "measure,value,boot_mean,boot_std_error,flags\n";
  auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
  for (const auto& e : r.entries) {
    if (e.decomposition) {
      const auto& d = *e.decomposition;
      const std::pair<const char*, double> parts[] = {
          {"baseline", d.baseline}, {"linear", d.linear},     {"quadratic", d.quadratic},
          {"total", d.total},       {"exact_ri", d.exact_ri}, {"pair_baseline", d.pair_baseline},
          {"pair_residual", d.pair_residual}};
      for (const auto& [name, v] : parts) os << e.id << '.' << name << ',' << format_number(v) << ",,,\n";
      continue;
    }
    std::string flags;
    if (e.degenerate) flags = "degenerate:" + e.reason;
    if (e.convergence_warning) flags += (flags.empty() ? "" : ";") + std::string("convergence_warning");
    if (!e.bootstrap_error.empty()) flags += (flags.empty() ? "" : ";") + ("bootstrap:" + e.bootstrap_error);
    os << e.id << ',' << opt(e.value) << ',' << (e.bootstrap ? format_number(e.bootstrap->mean) : "") << ','
       << (e.bootstrap ? format_number(e.bootstrap->std_error) : "") << ',' << flags << '\n';
  }
}

void write_residual_csv(std::ostream& os, const ContingencyTable& t, const Matrix<double>& m) {
  os << "cluster";
  for (const auto& label : t.col_labels()) os << ',' << csv_field(label);
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << csv_field(t.row_labels()[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << ',' << format_number(m(i, j));
    os << '\n';
  }
}

}  // namespace clucmp
