#include <doctest.h>

#include <numbers>
#include <random>

#include "clucmp/info.hpp"
#include "oracle.hpp"

using namespace clucmp;

namespace {

JointDistribution<double> joint(std::initializer_list<std::initializer_list<Count>> rows) {
  CountMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Count v : r) m(i, j++) = v;
    ++i;
  }
  return joint_distribution<double>(ContingencyTable(m));
}

}  // namespace

TEST_SUITE("info") {
  TEST_CASE("entropy examples") {
    CHECK(entropy(Vector<double>((Vector<double>(2) << 0.5, 0.5).finished())) == doctest::Approx(std::numbers::ln2));
    CHECK(entropy(Vector<double>::Ones(1)) == 0.0);
    CHECK(entropy((Vector<double>(2) << 0.6, 0.4).finished()) == doctest::Approx(0.67301166700925652).epsilon(1e-14));
    CHECK(entropy((Vector<double>(2) << 0.5, 0.5).finished(), LogBase::bits) == doctest::Approx(1.0));
    CHECK_THROWS_AS(entropy((Vector<double>(2) << 0.5, 0.6).finished()), Error);
    CHECK_THROWS_AS(entropy((Vector<double>(2) << 1.5, -0.5).finished()), Error);
  }

  TEST_CASE("MI, VI and NMI examples") {
    const auto w = joint({{2, 1}, {0, 2}});
    CHECK(mutual_information(w) == doctest::Approx(0.2911031660323688).epsilon(1e-13));
    CHECK(variation_of_information(w) == doctest::Approx(0.76381700195377544).epsilon(1e-13));
    CHECK(normalized_mi(w) == doctest::Approx(0.4325380677663126).epsilon(1e-13));

    const auto product = joint({{1, 2}, {2, 4}});
    CHECK(mutual_information(product) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(normalized_mi(product) == doctest::Approx(0.0).epsilon(1e-15));

    const auto id = joint({{2, 0}, {0, 2}});
    CHECK(mutual_information(id) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(variation_of_information(id) == 0.0);
    CHECK(normalized_mi(id) == doctest::Approx(1.0));

    const auto uniform = joint({{1, 1}, {1, 1}});
    CHECK(variation_of_information(uniform) == doctest::Approx(2 * std::numbers::ln2));

    try {
      normalized_mi(joint({{5}}));
      FAIL("expected DegenerateNMI");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::degenerate_nmi);
    }
  }

  TEST_CASE("agreement with direct summation on labels") {
    std::mt19937_64 g(1);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 40)(g);
      const auto la = oracle::random_labels(g, n, 5), lb = oracle::random_labels(g, n, 5);
      const auto j = joint_distribution<double>(contingency(clustering_from_labels(la), clustering_from_labels(lb)));
      const double mi = mutual_information(j);
      CHECK(std::abs(mi - static_cast<double>(oracle::mutual_information(la, lb))) <= 1e-12);
      const auto f = oracle::frequencies(la, lb);
      const double ha = static_cast<double>(oracle::entropy(f.a));
      const double hb = static_cast<double>(oracle::entropy(f.b));
      CHECK(std::abs(entropy(j.row_marginals()) - ha) <= 1e-12);
      // bounds
      CHECK(mi >= 0.0);
      CHECK(mi <= std::min(ha, hb) + 1e-12);
      const double vi = variation_of_information(j);
      CHECK(vi >= 0.0);
      CHECK(std::abs(vi - (ha + hb - 2 * mi)) <= 1e-12);
      // base coherence
      CHECK(std::abs(mutual_information(j, LogBase::bits) * std::numbers::ln2 - mi) <= 1e-12);
      CHECK(std::abs(variation_of_information(j, LogBase::bits) * std::numbers::ln2 - vi) <= 1e-12);
      if (f.a.size() > 1 || f.b.size() > 1) {
        const double nmi = normalized_mi(j);
        CHECK(nmi >= -1e-15);
        CHECK(nmi <= 1.0 + 1e-12);
      }
    }
  }

  TEST_CASE("VI vanishes exactly on relabelings of the same partition") {
    std::mt19937_64 g(2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto la = oracle::random_labels(g, 30, 6);
      auto lb = la;
      for (int& l : lb) l = 10 - l;
      const auto j = joint_distribution<double>(contingency(clustering_from_labels(la), clustering_from_labels(lb)));
      CHECK(variation_of_information(j) == doctest::Approx(0.0).epsilon(1e-12));
      // and is positive once one element moves
      auto lc = la;
      lc[0] = 99;
      const auto k = joint_distribution<double>(contingency(clustering_from_labels(la), clustering_from_labels(lc)));
      CHECK(variation_of_information(k) > 1e-6);
    }
  }

  TEST_CASE("VI triangle inequality") {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 200; ++trial) {
      const auto la = oracle::random_labels(g, 15, 4), lb = oracle::random_labels(g, 15, 4),
                 lc = oracle::random_labels(g, 15, 4);
      auto vi = [](const oracle::Labels& x, const oracle::Labels& y) {
        return variation_of_information(
            joint_distribution<double>(contingency(clustering_from_labels(x), clustering_from_labels(y))));
      };
      CHECK(vi(la, lc) <= vi(la, lb) + vi(lb, lc) + 1e-12);
    }
  }
}
