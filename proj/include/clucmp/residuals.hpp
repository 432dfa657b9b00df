#pragma once

#include <cmath>
#include <vector>

#include "clucmp/info.hpp"
#include "clucmp/partition.hpp"

namespace clucmp {

/// Deviations of a joint distribution from the independence coupling
/// p_i. p_.j with the same marginals.
template <typename Scalar = double>
struct ResidualField {
  Matrix<Scalar> delta;          ///< p_ij - p_i. p_.j
  Matrix<Scalar> epsilon;        ///< delta_ij / (p_i. p_.j)
  Matrix<Scalar> expected_mass;  ///< p_i. p_.j

  Scalar max_abs_epsilon() const { return epsilon.cwiseAbs().maxCoeff(); }
};

template <typename Scalar>
ResidualField<Scalar> residuals(const JointDistribution<Scalar>& j) {
  ResidualField<Scalar> rf;
  rf.expected_mass = j.independent_mass();
  rf.delta = j.p() - rf.expected_mass;
  rf.epsilon = rf.delta.cwiseQuotient(rf.expected_mass);
  return rf;
}

/// Residuals of a count table, with delta_ij = (n_ij N - a_i b_j) / N^2 formed
/// from the exact integer numerator, so product tables give exact zeros.
template <typename Scalar = double>
ResidualField<Scalar> residuals(const ContingencyTable& t) {
  const Scalar n = static_cast<Scalar>(t.n_elements());
  const Vector<Scalar> r = size_distribution<Scalar>(t.row_sums());
  const Vector<Scalar> c = size_distribution<Scalar>(t.col_sums());
  ResidualField<Scalar> rf;
  rf.expected_mass = r * c.transpose();
  rf.delta.resize(t.rows(), t.cols());
  rf.epsilon.resize(t.rows(), t.cols());
  for (Eigen::Index jj = 0; jj < t.cols(); ++jj)
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      const Count num = t.counts()(i, jj) * t.n_elements() - t.row_sums()(i) * t.col_sums()(jj);
      rf.delta(i, jj) = static_cast<Scalar>(num) / n / n;
      rf.epsilon(i, jj) = static_cast<Scalar>(num) / static_cast<Scalar>(t.row_sums()(i) * t.col_sums()(jj));
    }
  return rf;
}

/// Half the Pearson statistic, 1/2 sum delta^2 / (p_i. p_.j): the leading
/// term of the MI expansion, in nats.
template <typename Scalar>
Scalar chi_square_approx(const ResidualField<Scalar>& rf) {
  return (rf.delta.array().square() / rf.expected_mass.array()).sum() / Scalar(2);
}

template <typename Scalar = double>
struct SeriesApproximation {
  int order = 2;
  Scalar value = 0;
  /// terms[r - 2] is the order-r contribution (-1)^r / (r(r-1)) sum delta^r / E^(r-1).
  std::vector<Scalar> terms;
  /// Set when max |epsilon| >= 1, outside the power series' disc of convergence.
  bool convergence_warning = false;

  Scalar term(int r) const { return terms.at(static_cast<std::size_t>(r - 2)); }
};

inline constexpr int max_series_order = 12;

/// MI power series in the residuals, truncated after `order`.
template <typename Scalar>
SeriesApproximation<Scalar> mi_series(const ResidualField<Scalar>& rf, int order) {
  if (order < 2 || order > max_series_order)
    throw Error(Errc::invalid_order, "series order must lie in [2, 12]");
  SeriesApproximation<Scalar> s;
  s.order = order;
  s.convergence_warning = rf.max_abs_epsilon() >= Scalar(1);
  // delta^r / E^(r-1) = E * eps^r
  const auto mass = rf.expected_mass.array();
  const auto eps = rf.epsilon.array();
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> power = eps.square();
  for (int r = 2; r <= order; ++r) {
    const Scalar sign = (r % 2 == 0) ? Scalar(1) : Scalar(-1);
    const Scalar term = sign / Scalar(r * (r - 1)) * (mass * power).sum();
    s.terms.push_back(term);
    power *= eps;
  }
  for (const Scalar t : s.terms) s.value += t;
  return s;
}

/// Second-order VI: H(A) + H(B) - chi^2_ind, with chi^2_ind = 2 chi_square_approx.
template <typename Scalar>
Scalar vi_quadratic_approx(const JointDistribution<Scalar>& j) {
  const Scalar chi2_ind = Scalar(2) * chi_square_approx(residuals(j));
  return entropy(j.row_marginals()) + entropy(j.col_marginals()) - chi2_ind;
}

struct RIDecomposition {
  double baseline = 0;   ///< 1 - sum a^2 - sum b^2 + 2 (sum a^2)(sum b^2)
  double linear = 0;     ///< 4 sum p_i. p_.j delta_ij
  double quadratic = 0;  ///< 2 sum delta_ij^2
  double total = 0;      ///< large-N approximation: baseline + linear + quadratic
  double exact_ri = 0;   ///< finite-N Rand index from pair counts
  /// Exact pair-space split exact_ri = pair_baseline + pair_residual, with
  /// pair_baseline = 1 - A/M - B/M + 2AB/M^2 and pair_residual = (2/M)(T - AB/M).
  double pair_baseline = 0;
  double pair_residual = 0;
};

RIDecomposition ri_decomposition(const ContingencyTable& t);

enum class ResidualKind { mi, ari };

struct ResidualMatrix {
  Matrix<double> raw;         ///< per-cell contributions, summing to the parent quantity
  Matrix<double> normalized;  ///< raw / max |raw|; raw itself when every cell is 0
  double scale = 0;           ///< max |raw|
};

/// mi: p_ij log(p_ij / (p_i. p_.j)), summing to I.
/// ari: C(n_ij,2) - C(a_i,2) C(b_j,2) / C(N,2), summing to T - AB/M.
ResidualMatrix residual_matrix(const ContingencyTable& t, ResidualKind kind);

}  // namespace clucmp
