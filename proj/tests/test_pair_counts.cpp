#include <doctest.h>

#include <random>

#include "clucmp/pair_counts.hpp"
#include "oracle.hpp"

using namespace clucmp;

namespace {

ContingencyTable table(std::initializer_list<std::initializer_list<Count>> rows) {
  CountMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Count v : r) m(i, j++) = v;
    ++i;
  }
  return ContingencyTable(m);
}

const ContingencyTable kW = table({{2, 1}, {0, 2}});
const ContingencyTable kCrossed = table({{1, 1}, {1, 1}});
const ContingencyTable kIdentical = table({{2, 0}, {0, 2}});

}  // namespace

TEST_SUITE("pair_counts") {
  TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    // beyond 64 bits
    CHECK(binomial(200, 100) == BigInt("90548514656103281165404177077484163874504589675413336841320"));
  }

  TEST_CASE("pair counts of the fixtures") {
    const auto w = pair_counts(kW);
    CHECK(w.a_pairs == 4);
    CHECK(w.b_pairs == 4);
    CHECK(w.t_pairs == 2);
    CHECK(w.m_pairs == 10);

    const auto id = pair_counts(kIdentical);
    CHECK(id.a_pairs == 2);
    CHECK(id.b_pairs == 2);
    CHECK(id.t_pairs == 2);
    CHECK(id.m_pairs == 6);

    const auto x = pair_counts(kCrossed);
    CHECK(x.a_pairs == 2);
    CHECK(x.t_pairs == 0);
    CHECK(x.m_pairs == 6);
  }

  TEST_CASE("too few elements") {
    try {
      pair_counts(table({{1}}));
      FAIL("expected TooFewElements");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_few_elements);
    }
  }

  TEST_CASE("tuple counts") {
    const auto t3 = tuple_counts(kW, 3);
    CHECK(t3.a_tuples == 1);
    CHECK(t3.b_tuples == 1);
    CHECK(t3.t_tuples == 0);
    CHECK(t3.m_tuples == 10);

    const auto t2 = tuple_counts(kW, 2);
    const auto pc = pair_counts(kW);
    CHECK(t2.a_tuples == pc.a_pairs);
    CHECK(t2.b_tuples == pc.b_pairs);
    CHECK(t2.t_tuples == pc.t_pairs);
    CHECK(t2.m_tuples == pc.m_pairs);

    const auto single = tuple_counts(table({{6}}), 6);
    CHECK(single.a_tuples == 1);
    CHECK(single.b_tuples == 1);
    CHECK(single.t_tuples == 1);
    CHECK(single.m_tuples == 1);

    try {
      tuple_counts(kW, 6);
      FAIL("expected OrderExceedsN");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::order_exceeds_n);
    }
    try {
      tuple_counts(kW, 1);
      FAIL("expected OrderTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::order_too_small);
    }
  }

  TEST_CASE("indices of the fixtures") {
    const auto w = pair_counts(kW);
    CHECK(exact::rand_index(w) == Rational(3, 5));
    CHECK(exact::adjusted_rand(w) == Rational(1, 6));
    CHECK(exact::jaccard(w) == Rational(1, 3));
    CHECK(exact::fowlkes_mallows_squared(w) == Rational(1, 4));
    CHECK(fowlkes_mallows(w) == 0.5);

    const auto id = pair_counts(kIdentical);
    CHECK(rand_index(id) == 1.0);
    CHECK(adjusted_rand(id) == 1.0);
    CHECK(jaccard(id) == 1.0);
    CHECK(fowlkes_mallows(id) == 1.0);

    const auto x = pair_counts(kCrossed);
    CHECK(exact::rand_index(x) == Rational(1, 3));
    CHECK(exact::adjusted_rand(x) == Rational(-1, 2));
    CHECK(jaccard(x) == 0.0);
    CHECK(fowlkes_mallows(x) == 0.0);
  }

  TEST_CASE("degenerate indices are reported, not defaulted") {
    // both all-singletons: A = B = T = 0
    const auto singletons = pair_counts(table({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    auto code_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::usage_error;
    };
    CHECK(code_of([&] { adjusted_rand(singletons); }) == Errc::degenerate_ari);
    CHECK(code_of([&] { jaccard(singletons); }) == Errc::degenerate_jaccard);
    CHECK(code_of([&] { fowlkes_mallows(singletons); }) == Errc::degenerate_fm);
    CHECK(rand_index(singletons) == 1.0);

    // both one cluster
    const auto one = pair_counts(table({{4}}));
    CHECK(code_of([&] { adjusted_rand(one); }) == Errc::degenerate_ari);
    CHECK(jaccard(one) == 1.0);
  }

  TEST_CASE("pair table") {
    const auto q = pair_table(pair_counts(kW));
    CHECK(q.q(0, 0) == doctest::Approx(0.2));
    CHECK(q.q(0, 1) == doctest::Approx(0.2));
    CHECK(q.q(1, 0) == doctest::Approx(0.2));
    CHECK(q.q(1, 1) == doctest::Approx(0.4));
    CHECK(q.deltas(0, 0) == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(q.s_a == doctest::Approx(0.4));

    const auto id = pair_table(pair_counts(kIdentical));
    CHECK(id.q(0, 0) == doctest::Approx(1.0 / 3));
    CHECK(id.q0(0, 0) == doctest::Approx(1.0 / 9));
    CHECK(id.deltas(0, 0) == doctest::Approx(2.0 / 9));

    // 4 x 4 product table: rows [4,4], cols [2,6] ... use counts that factor in pair space
    // q0 equals q only when T = AB/M; T=0 with A=0 satisfies it.
    const auto indep = pair_table(pair_counts(table({{1, 1, 1}})));
    CHECK(indep.deltas.cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("pair table invariants on random tables") {
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = ContingencyTable(oracle::random_counts(g, 1 + trial % 5, 1 + (trial / 5) % 5, 9));
      if (t.n_elements() < 2) continue;
      const auto pc = pair_counts(t);
      CHECK(pc.t_pairs <= std::min(pc.a_pairs, pc.b_pairs));
      CHECK(std::max(pc.a_pairs, pc.b_pairs) <= pc.m_pairs);
      CHECK(pc.m_pairs * 2 == BigInt(t.n_elements()) * (t.n_elements() - 1));
      const auto q = pair_table(pc);
      CHECK(std::abs(q.q.sum() - 1.0) <= 1e-12);
      CHECK(std::abs(q.q0.sum() - 1.0) <= 1e-12);
      CHECK(std::abs(q.deltas.sum()) <= 1e-12);
      CHECK(std::abs((q.q - q.q0 - q.deltas).cwiseAbs().maxCoeff()) <= 1e-12);
      // inclusion-exclusion on the separated-by-both cell
      CHECK(pc.m_pairs - pc.a_pairs - pc.b_pairs + pc.t_pairs >= 0);
      CHECK(std::abs(q.q(1, 1) * to_double(pc.m_pairs) - to_double(BigInt(pc.m_pairs - pc.a_pairs - pc.b_pairs + pc.t_pairs))) <=
            1e-9);
    }
  }

  TEST_CASE("self comparison") {
    std::mt19937_64 g(8);
    for (int trial = 0; trial < 100; ++trial) {
      const auto l = oracle::random_labels(g, 20, 6);
      const auto a = clustering_from_labels(l);
      const auto pc = pair_counts(contingency(a, a));
      CHECK(rand_index(pc) == 1.0);
      if (a.n_clusters() > 1 && a.n_clusters() < a.n_elements()) CHECK(adjusted_rand(pc) == 1.0);
    }
  }

  TEST_CASE("hypergeometric null centers T at AB/M") {
    // 2500 uniform relabelings preserving both size sequences
    std::mt19937_64 g(21);
    std::vector<int> la, lb;
    for (int i = 0; i < 40; ++i) la.push_back(i < 20 ? 0 : (i < 32 ? 1 : 2));
    for (int i = 0; i < 40; ++i) lb.push_back(i < 10 ? 0 : (i < 25 ? 1 : (i < 35 ? 2 : 3)));
    const auto pc0 = pair_counts(contingency(clustering_from_labels(la), clustering_from_labels(lb)));
    const double expected = ratio(pc0.a_pairs * pc0.b_pairs, pc0.m_pairs);
    const int reps = 2500;
    double sum = 0, sq = 0;
    for (int r = 0; r < reps; ++r) {
      std::shuffle(lb.begin(), lb.end(), g);
      const double t = to_double(pair_counts(contingency(clustering_from_labels(la), clustering_from_labels(lb))).t_pairs);
      sum += t;
      sq += t * t;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) * reps / (reps - 1) / reps);
    CHECK(std::abs(mean - expected) <= 3 * se);
  }
}
