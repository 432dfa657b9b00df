#include "clucmp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clucmp/experiments.hpp"
#include "clucmp/format.hpp"
#include "clucmp/io.hpp"
#include "clucmp/report.hpp"

namespace clucmp {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CLUCMP_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw Error(Errc::usage_error, "CLUCMP_SEED must be a nonnegative integer");
  }
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

const std::map<std::string, PartitionFormat> kInputFormats{
    {"auto", PartitionFormat::automatic}, {"pairs", PartitionFormat::pairs}, {"dense", PartitionFormat::dense}};
const std::map<std::string, CollisionMode> kModes{{"with", CollisionMode::with_replacement},
                                                  {"without", CollisionMode::without_replacement}};

struct CommonFlags {
  std::string input_format = "auto";
  std::string mode = "without";
  double lambda = 0.0;
  std::string format;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
};

void add_mode_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--mode", f.mode, "collision sampling for i2/i3/i4: with | without replacement")
      ->check(CLI::IsMember({"with", "without"}));
  cmd->add_option("--lambda", f.lambda, "additive smoothing of collision sums")->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", f.threads, "worker threads (results do not depend on this)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare clusterings with pair-counting and information-theoretic measures", "clucmp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  CommonFlags flags;
  std::string file_a, file_b, measures_arg, kind = "mi", scenario_arg, eps_grid = "0:0.5:0.05",
                                            out_path;
  bool bits = false, raw = false;
  std::size_t bootstrap = 0, n = 1000, trials = 100;

  auto* cmp = app.add_subcommand("compare", "score two partitions of the same elements");
  cmp->add_option("file_a", file_a)->required();
  cmp->add_option("file_b", file_b)->required();
  cmp->add_option("--measures", measures_arg, "comma-separated: ri,ari,jaccard,fm,mi,vi,nmi,chi2,i2,i3,i4,ri_decomp");
  cmp->add_flag("--bits", bits, "report information in bits instead of nats");
  cmp->add_option("--bootstrap", bootstrap, "bootstrap replicates for standard errors");
  cmp->add_option("--seed", flags.seed, "bootstrap seed");
  cmp->add_option("--format", flags.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmp->add_option("--input-format", flags.input_format)->check(CLI::IsMember({"auto", "pairs", "dense"}));
  add_mode_flags(cmp, flags);

  auto* res = app.add_subcommand("residuals", "residual matrix of two partitions as CSV");
  res->add_option("file_a", file_a)->required();
  res->add_option("file_b", file_b)->required();
  res->add_option("--kind", kind, "mi | ari")->check(CLI::IsMember({"mi", "ari"}));
  res->add_flag("--raw", raw, "print unnormalized cell contributions");
  res->add_option("--input-format", flags.input_format)->check(CLI::IsMember({"auto", "pairs", "dense"}));

  auto* exp = app.add_subcommand("experiment", "synthetic exchange experiment curves");
  exp->add_option("scenario", scenario_arg, "balanced | small_small | big_small")
      ->required()
      ->check(CLI::IsMember({"balanced", "small_small", "big_small"}));
  exp->add_option("--n", n, "number of elements");
  exp->add_option("--trials", trials, "independent trials per eps");
  exp->add_option("--eps-grid", eps_grid, "start:stop:step");
  exp->add_option("--measures", measures_arg, "comma-separated measure ids");
  exp->add_option("--seed", flags.seed, "root seed");
  exp->add_option("--out", out_path, "write to this file instead of standard output");
  exp->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"json", "csv"}));
  add_mode_flags(exp, flags);

  std::vector<std::string> argv_store{"clucmp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "clucmp: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    MeasureOptions mopts;
    mopts.base = bits ? LogBase::bits : LogBase::natural;
    mopts.mode = kModes.at(flags.mode);
    mopts.lambda = flags.lambda;
    const std::uint64_t seed = flags.seed ? *flags.seed : default_seed();

    if (cmp->parsed()) {
      const auto fmt = kInputFormats.at(flags.input_format);
      const Clustering a = parse_partition_file(file_a, fmt);
      const Clustering b = parse_partition_file(file_b, fmt);
      const auto ids = measures_arg.empty() ? default_compare_measures() : split_list(measures_arg);
      const CompareOptions copts{mopts, bootstrap, seed, flags.threads};
      const MeasureReport report = compare(a, b, ids, copts);
      if (flags.format == "csv")
        write_csv(out, report);
      else
        out << to_json(report);
      return exit_ok;
    }

    if (res->parsed()) {
      const auto fmt = kInputFormats.at(flags.input_format);
      const Clustering a = parse_partition_file(file_a, fmt);
      const Clustering b = parse_partition_file(file_b, fmt);
      const ContingencyTable t = contingency(a, b);
      const ResidualMatrix m = residual_matrix(t, kind == "ari" ? ResidualKind::ari : ResidualKind::mi);
      write_residual_csv(out, t, raw ? m.raw : m.normalized);
      return exit_ok;
    }

    ExperimentConfig cfg;
    cfg.scenario = *parse_scenario(scenario_arg);
    cfg.n_elements = n;
    cfg.n_trials = trials;
    cfg.eps_grid = parse_eps_grid(eps_grid);
    if (!measures_arg.empty()) {
      cfg.measures.clear();
      for (const auto& id : split_list(measures_arg)) {
        const auto m = parse_measure(id);
        if (!m) throw Error(Errc::usage_error, "unknown measure '" + id + "'");
        cfg.measures.push_back(*m);
      }
    }
    cfg.seed = seed;
    cfg.options = mopts;
    cfg.threads = flags.threads;
    validate(cfg);
    const ExperimentResult result = run_experiment(cfg);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw Error(Errc::usage_error, "cannot write '" + out_path + "'");
    }
    std::ostream& sink = out_path.empty() ? out : file;
    if (flags.format == "json")
      sink << to_json(result);
    else
      write_csv(sink, result);
    return exit_ok;
  } catch (const Error& e) {
    err << "clucmp: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "clucmp: internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace clucmp
