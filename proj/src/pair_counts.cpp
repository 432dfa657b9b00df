#include "clucmp/pair_counts.hpp"

#include <cmath>

namespace clucmp {

BigInt binomial(Count n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = static_cast<int>(n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }
double to_double(const Rational& x) { return x.convert_to<double>(); }
double ratio(const BigInt& num, const BigInt& den) { return to_double(Rational(num, den)); }

namespace {

BigInt binomial_sum(const CountVector& v, int k) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += binomial(v(i), k);
  return s;
}

BigInt binomial_sum(const CountMatrix& m, int k) {
  BigInt s = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) s += binomial(m(i, j), k);
  return s;
}

}  // namespace

PairCounts pair_counts(const ContingencyTable& t) {
  if (t.n_elements() < 2) throw Error(Errc::too_few_elements, "pair counts need N >= 2");
  return {binomial_sum(t.row_sums(), 2), binomial_sum(t.col_sums(), 2), binomial_sum(t.counts(), 2),
          binomial(t.n_elements(), 2)};
}

TupleCounts tuple_counts(const ContingencyTable& t, int k) {
  if (k < 2) throw Error(Errc::order_too_small, "tuple order must be at least 2");
  if (k > t.n_elements())
    throw Error(Errc::order_exceeds_n, "tuple order " + std::to_string(k) + " exceeds N");
  return {k, binomial_sum(t.row_sums(), k), binomial_sum(t.col_sums(), k), binomial_sum(t.counts(), k),
          binomial(t.n_elements(), k)};
}

namespace exact {

Rational rand_index(const PairCounts& pc) {
  return Rational(pc.t_pairs + (pc.m_pairs - pc.a_pairs - pc.b_pairs + pc.t_pairs), pc.m_pairs);
}

Rational adjusted_rand(const PairCounts& pc) {
  const auto& [A, B, T, M] = pc;
  // (T - AB/M) / ((A+B)/2 - AB/M), cleared of fractions.
  const BigInt den = (A + B) * M - 2 * A * B;
  if (den == 0) throw Error(Errc::degenerate_ari, "ARI undefined: zero chance-corrected range");
  return Rational(2 * (T * M - A * B), den);
}

Rational jaccard(const PairCounts& pc) {
  const BigInt den = pc.a_pairs + pc.b_pairs - pc.t_pairs;
  if (den == 0) throw Error(Errc::degenerate_jaccard, "Jaccard undefined: no co-assigned pairs");
  return Rational(pc.t_pairs, den);
}

Rational fowlkes_mallows_squared(const PairCounts& pc) {
  if (pc.a_pairs == 0 || pc.b_pairs == 0)
    throw Error(Errc::degenerate_fm, "Fowlkes-Mallows undefined: a partition has no co-assigned pairs");
  return Rational(pc.t_pairs * pc.t_pairs, pc.a_pairs * pc.b_pairs);
}

}  // namespace exact

double rand_index(const PairCounts& pc) {
  if (pc.m_pairs < 1) throw Error(Errc::too_few_elements, "Rand index needs at least one pair");
  return to_double(exact::rand_index(pc));
}

double adjusted_rand(const PairCounts& pc) { return to_double(exact::adjusted_rand(pc)); }
double jaccard(const PairCounts& pc) { return to_double(exact::jaccard(pc)); }
double fowlkes_mallows(const PairCounts& pc) { return std::sqrt(to_double(exact::fowlkes_mallows_squared(pc))); }

}  // namespace clucmp
