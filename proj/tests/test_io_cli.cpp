#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clucmp/cli.hpp"
#include "clucmp/io.hpp"

using namespace clucmp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("clucmp-test-" + std::to_string(std::rand()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& body) const {
    const auto p = path / name;
    std::ofstream(p) << body;
    return p.string();
  }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kWA = "1\tx\n2\tx\n3\tx\n4\ty\n5\ty\n";
const char* kWB = "1\tp\n2\tp\n3\tq\n4\tq\n5\tq\n";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("two-column parsing") {
    std::istringstream in(kWA);
    const auto c = parse_partition(in);
    CHECK(c.cluster_sizes() == std::vector<Count>{3, 2});
    CHECK(c.element_ids().front() == "1");
  }

  TEST_CASE("dense parsing") {
    std::istringstream in("a\na\nb\n");
    const auto c = parse_partition(in);
    CHECK(c.cluster_sizes() == std::vector<Count>{2, 1});
    CHECK(c.element_ids() == std::vector<std::string>{"0", "1", "2"});
  }

  TEST_CASE("comments, blank lines and CRLF") {
    std::istringstream in("# header\r\n\r\n7\tred\r\n8\tblue\r\n# tail\n9\tred\n");
    const auto c = parse_partition(in);
    CHECK(c.cluster_sizes() == std::vector<Count>{2, 1});
    CHECK(c.cluster_labels() == std::vector<std::string>{"red", "blue"});
  }

  TEST_CASE("malformed rows give the line number") {
    std::istringstream in("1\n");
    try {
      parse_partition(in, PartitionFormat::pairs);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.code() == Errc::parse_error);
    }
    std::istringstream in3("1\ta\n2\tb\n3\tc\td\n");
    try {
      parse_partition(in3);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream dup("1\ta\n1\tb\n");
    try {
      parse_partition(dup);
      FAIL("expected DuplicateElement");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::duplicate_element);
    }
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_partition(empty), Error);
  }

  TEST_CASE("write and read back") {
    const auto c = build_clustering({{"a b", "x,y"}, {"c", "z"}, {"d", "x,y"}});
    std::ostringstream out;
    write_partition(out, c);
    std::istringstream in(out.str());
    const auto r = parse_partition(in);
    CHECK(r.element_ids() == c.element_ids());
    CHECK(r.membership() == c.membership());
    CHECK(r.cluster_labels() == c.cluster_labels());
  }

  TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("compare on W") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA), b = d.write("b.tsv", kWB);
    const auto r = run({"compare", a, b, "--measures", "ri,ari,jaccard,fm,mi,vi,i2", "--mode", "with"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "clucmp.compare/1");
    CHECK(j["measures"]["ri"]["value"].get<double>() == 0.6);
    CHECK(j["measures"]["ari"]["value"].get<double>() == doctest::Approx(1.0 / 6).epsilon(1e-9));
    CHECK(j["measures"]["jaccard"]["value"].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(j["measures"]["fm"]["value"].get<double>() == 0.5);
    CHECK(j["measures"]["mi"]["value"].get<double>() == doctest::Approx(0.2911031660).epsilon(1e-9));
    CHECK(j["measures"]["i2"]["value"].get<double>() == doctest::Approx(0.2862016873).epsilon(1e-9));
    CHECK(j["input"]["sizes_a"] == nlohmann::json::array({3, 2}));
  }

  TEST_CASE("identical files") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA);
    const auto r = run({"compare", a, a, "--measures", "ri,ari,jaccard,fm,nmi"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* m : {"ri", "ari", "jaccard", "fm", "nmi"}) CHECK(j["measures"][m]["value"].get<double>() == 1.0);
  }

  TEST_CASE("degenerate measures are reported in band") {
    TempDir d;
    const auto a = d.write("a.txt", "x\nx\nx\n");
    const auto r = run({"compare", a, a, "--measures", "ari,nmi,ri"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["measures"]["ari"]["degenerate"] == true);
    CHECK(j["measures"]["ari"]["reason"] == "DegenerateARI");
    CHECK(j["measures"]["nmi"]["degenerate"] == true);
    CHECK(j["measures"]["ri"]["value"].get<double>() == 1.0);
  }

  TEST_CASE("exit codes") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA);
    const auto other = d.write("o.tsv", "1\tx\n2\tx\n3\tx\n4\ty\n6\ty\n");
    const auto broken = d.write("bad.tsv", "1\tx\n2\n");
    CHECK(run({"compare", a, other}).code == exit_usage);
    const auto pe = run({"compare", a, broken, "--input-format", "pairs"});
    CHECK(pe.code == exit_usage);
    CHECK(pe.err.find("line 2") != std::string::npos);
    CHECK(run({"compare", a, (d.path / "missing").string()}).code == exit_usage);
    CHECK(run({"compare", a}).code == exit_usage);
    CHECK(run({"bogus"}).code == exit_usage);
    CHECK(run({"compare", a, a, "--measures", "nope"}).code == exit_usage);
    CHECK(run({"experiment", "balanced", "--eps-grid", "0:0.9:0.1"}).code == exit_usage);
    CHECK(run({"experiment", "balanced", "--measures", "vi", "--trials", "1"}).code == exit_usage);
    CHECK(run({"--version"}).code == exit_ok);
  }

  TEST_CASE("bootstrap output is reproducible") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA), b = d.write("b.tsv", kWB);
    const std::vector<std::string> args{"compare", a, b, "--measures", "ri,nmi", "--bootstrap", "100", "--seed", "5"};
    const auto r1 = run(args), r2 = run(args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "4"});
    CHECK(run(threaded).out == r1.out);
    const auto j = nlohmann::json::parse(r1.out);
    CHECK(j["measures"]["ri"]["bootstrap"]["used"].get<int>() == 100);
  }

  TEST_CASE("seed from the environment") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA), b = d.write("b.tsv", kWB);
    const std::vector<std::string> base{"compare", a, b, "--measures", "ri", "--bootstrap", "50"};
    ::setenv("CLUCMP_SEED", "5", 1);
    const auto env = run(base);
    ::unsetenv("CLUCMP_SEED");
    auto explicit_seed = base;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "5"});
    CHECK(env.out == run(explicit_seed).out);
    CHECK(env.out != run(base).out);
    ::setenv("CLUCMP_SEED", "abc", 1);
    CHECK(run(base).code == exit_usage);
    ::unsetenv("CLUCMP_SEED");
  }

  TEST_CASE("csv output") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA), b = d.write("b.tsv", kWB);
    const auto r = run({"compare", a, b, "--measures", "ri,ri_decomp", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("measure,value,boot_mean,boot_std_error,flags\nri,0.6,,,\n", 0) == 0);
    CHECK(r.out.find("ri_decomp.quadratic,0.2048") != std::string::npos);
  }

  TEST_CASE("residuals command") {
    TempDir d;
    const auto a = d.write("a.tsv", kWA), b = d.write("b.tsv", kWB);
    const auto raw = run({"residuals", a, b, "--kind", "ari", "--raw"});
    REQUIRE(raw.code == 0);
    CHECK(raw.out == "cluster,p,q\nx,0.7,-0.9\ny,-0.1,0.7\n");

    const auto halves = d.write("h.tsv", "1\tx\n2\tx\n3\ty\n4\ty\n");
    const auto id = run({"residuals", halves, halves});
    CHECK(id.out == "cluster,x,y\nx,1,0\ny,0,1\n");

    const auto left = d.write("l.txt", "0\n0\n1\n1\n");
    const auto right = d.write("r.txt", "0\n1\n0\n1\n");
    const auto zero = run({"residuals", left, right, "--kind", "mi"});
    CHECK(zero.out == "cluster,0,1\n0,0,0\n1,0,0\n");
  }

  TEST_CASE("experiment command") {
    TempDir d;
    const std::vector<std::string> args{"experiment", "big_small", "--n", "200", "--trials", "1", "--seed", "7",
                                        "--eps-grid", "0:0.5:0.05"};
    const auto r1 = run(args), r2 = run(args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    std::size_t lines = 0;
    for (char c : r1.out) lines += c == '\n';
    CHECK(lines == 1 + 6 * 11);

    auto to_file = args;
    const auto path = (d.path / "curves.json").string();
    to_file.insert(to_file.end(), {"--format", "json", "--out", path});
    REQUIRE(run(to_file).code == 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["curves"].size() == 6);
    CHECK(j["curves"][0]["points"].size() == 11);
  }
}
