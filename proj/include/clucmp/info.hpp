#pragma once

#include <cmath>
#include <numbers>

#include "clucmp/partition.hpp"

namespace clucmp {

enum class LogBase { natural, bits };

/// Multiplier taking a value in nats to the requested base.
template <typename Scalar = double>
constexpr Scalar base_factor(LogBase base) noexcept {
  return base == LogBase::bits ? Scalar(1) / std::numbers::ln2_v<Scalar> : Scalar(1);
}

namespace detail {

// x log(x / y) with the 0 log 0 = 0 convention.
template <typename Scalar>
Scalar xlogx_over(Scalar x, Scalar y) {
  using std::log;
  return x > Scalar(0) ? x * log(x / y) : Scalar(0);
}

template <typename Derived>
void require_distribution(const Eigen::DenseBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  if (p.size() == 0 || (p.derived().array() < Scalar(0)).any() || abs(p.sum() - Scalar(1)) > Scalar(1e-9))
    throw Error(Errc::not_a_distribution, "entries must be nonnegative and sum to 1");
}

}  // namespace detail

/// Shannon entropy -sum p log p of any probability vector or matrix.
template <typename Derived>
typename Derived::Scalar entropy(const Eigen::DenseBase<Derived>& p, LogBase base = LogBase::natural) {
  using Scalar = typename Derived::Scalar;
  detail::require_distribution(p);
  Scalar h = 0;
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i) h -= detail::xlogx_over(p(i, j), Scalar(1));
  return h * base_factor<Scalar>(base);
}

template <typename Scalar>
Scalar mutual_information(const JointDistribution<Scalar>& j, LogBase base = LogBase::natural) {
  const auto& p = j.p();
  const auto& r = j.row_marginals();
  const auto& c = j.col_marginals();
  Scalar mi = 0;
  for (Eigen::Index col = 0; col < p.cols(); ++col)
    for (Eigen::Index row = 0; row < p.rows(); ++row)
      mi += detail::xlogx_over(p(row, col), r(row) * c(col));
  // Rounding can leave a tiny negative value on exact product tables.
  return std::max(mi, Scalar(0)) * base_factor<Scalar>(base);
}

template <typename Scalar>
Scalar variation_of_information(const JointDistribution<Scalar>& j, LogBase base = LogBase::natural) {
  const Scalar vi = entropy(j.row_marginals()) + entropy(j.col_marginals()) - Scalar(2) * mutual_information(j);
  return std::max(vi, Scalar(0)) * base_factor<Scalar>(base);
}

/// I / ((H(A) + H(B)) / 2).
template <typename Scalar>
Scalar normalized_mi(const JointDistribution<Scalar>& j) {
  const Scalar h = entropy(j.row_marginals()) + entropy(j.col_marginals());
  if (!(h > Scalar(0))) throw Error(Errc::degenerate_nmi, "NMI undefined: both partitions have one cluster");
  return mutual_information(j) / (h / Scalar(2));
}

}  // namespace clucmp
