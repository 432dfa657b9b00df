#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "clucmp/partition.hpp"

namespace clucmp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero when k > n.
BigInt binomial(Count n, int k);

double to_double(const BigInt& x);
double to_double(const Rational& x);
/// num / den evaluated as a single rounding of the exact quotient.
double ratio(const BigInt& num, const BigInt& den);

struct PairCounts {
  BigInt a_pairs;  ///< pairs co-assigned by the first partition
  BigInt b_pairs;  ///< pairs co-assigned by the second partition
  BigInt t_pairs;  ///< pairs co-assigned by both
  BigInt m_pairs;  ///< C(N, 2)
};

/// Order-k analogue of PairCounts: C(., k) in place of C(., 2).
struct TupleCounts {
  int order = 2;
  BigInt a_tuples;
  BigInt b_tuples;
  BigInt t_tuples;
  BigInt m_tuples;
};

PairCounts pair_counts(const ContingencyTable& t);
TupleCounts tuple_counts(const ContingencyTable& t, int k);

double rand_index(const PairCounts& pc);
double adjusted_rand(const PairCounts& pc);
double jaccard(const PairCounts& pc);
double fowlkes_mallows(const PairCounts& pc);

namespace exact {
Rational rand_index(const PairCounts& pc);
Rational adjusted_rand(const PairCounts& pc);
Rational jaccard(const PairCounts& pc);
/// FM^2 = T^2 / (A B); the index itself is irrational in general.
Rational fowlkes_mallows_squared(const PairCounts& pc);
}  // namespace exact

/// 2x2 same/different table over element pairs, stored as
/// {11, 10, 01, 00}: first digit for the first partition, 1 = same cluster.
template <typename Scalar = double>
struct PairTable {
  Eigen::Matrix<Scalar, 2, 2> q;
  Eigen::Matrix<Scalar, 2, 2> q0;
  Eigen::Matrix<Scalar, 2, 2> deltas;
  Scalar s_a = 0;
  Scalar s_b = 0;
};

template <typename Scalar = double>
PairTable<Scalar> pair_table(const PairCounts& pc) {
  if (pc.m_pairs < 1) throw Error(Errc::too_few_elements, "pair table needs at least one pair");
  const auto& [A, B, T, M] = pc;
  auto frac = [&](const BigInt& x) { return static_cast<Scalar>(ratio(x, M)); };
  PairTable<Scalar> out;
  out.q << frac(T), frac(A - T), frac(B - T), frac(M - A - B + T);
  out.s_a = frac(A);
  out.s_b = frac(B);
  const Scalar sa = out.s_a, sb = out.s_b;
  out.q0 << sa * sb, sa * (Scalar(1) - sb), (Scalar(1) - sa) * sb, (Scalar(1) - sa) * (Scalar(1) - sb);
  // Delta_11 = (T - AB/M) / M exactly; the others follow from the shared margins.
  const Scalar d11 = static_cast<Scalar>(ratio(T * M - A * B, M * M));
  out.deltas << d11, -d11, -d11, d11;
  return out;
}

}  // namespace clucmp
