#pragma once

#include <cmath>
#include <vector>

#include "clucmp/info.hpp"
#include "clucmp/partition.hpp"

namespace clucmp {

/// with_replacement: C_k = sum p^k, the i.i.d.-draw collision probability.
/// without_replacement: C_k = sum C(n, k) / C(N, k), the fraction of
/// k-subsets that fall inside one cluster (or one intersection).
enum class CollisionMode { with_replacement, without_replacement };

struct CollisionEstimate {
  double order = 2;  ///< integral in without_replacement mode
  CollisionMode mode = CollisionMode::with_replacement;
  double c_a = 0;
  double c_b = 0;
  double c_joint = 0;
  double smoothing_lambda = 0;
};

/// Collision probabilities of both marginals and of the joint labels.
///
/// With lambda > 0 every term of each sum gets +lambda and each sum is
/// renormalized by its own denominator plus (number of terms) * lambda;
/// the same lambda is used for all three sums.
CollisionEstimate collision_probability(const ContingencyTable& t, double order, CollisionMode mode,
                                        double lambda = 0.0);

/// Renyi entropy log(sum p^alpha) / (1 - alpha), in nats. Within 1e-9 of
/// alpha = 1 this is the Shannon entropy.
template <typename Derived>
typename Derived::Scalar renyi_entropy(const Eigen::DenseBase<Derived>& p, double alpha) {
  using Scalar = typename Derived::Scalar;
  using std::log;
  using std::pow;
  if (!(alpha > 0.0)) throw Error(Errc::invalid_order, "Renyi order must be positive");
  detail::require_distribution(p);
  if (std::abs(alpha - 1.0) <= 1e-9) return entropy(p);
  Scalar c = 0;
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      if (p(i, j) > Scalar(0)) c += pow(p(i, j), Scalar(alpha));
  return std::max(log(c) / Scalar(1.0 - alpha), Scalar(0));
}

struct RenyiReport {
  double alpha = 2;
  double h_a = 0;
  double h_b = 0;
  double h_joint = 0;
  double j_alpha = 0;  ///< h_a + h_b - h_joint
  CollisionEstimate collisions;
};

/// Renyi contrast J_alpha = H_alpha(A) + H_alpha(B) - H_alpha(A,B).
///
/// This sign makes J_alpha vanish on product tables and tend to I as
/// alpha -> 1. Throws ZeroCollision when an unsmoothed sum is empty.
RenyiReport renyi_contrast(const ContingencyTable& t, double alpha, CollisionMode mode,
                           double lambda = 0.0);

/// Weights L_m(1) of the Lagrange polynomial through nodes m = 2..k,
/// evaluated at 1: {1} for k=2, {2,-1} for k=3, {3,-3,1} for k=4.
std::vector<double> lagrange_weights_at_one(int k);

struct KTupleEstimate {
  int order = 3;
  double value = 0;
  std::vector<double> contrasts;  ///< J_2 .. J_k
  std::vector<double> weights;    ///< matching Lagrange weights
};

/// I^(k): the contrasts J_2..J_k extrapolated back to alpha = 1.
/// k = 2 returns J_2 itself.
KTupleEstimate mi_ktuple(const ContingencyTable& t, int k, CollisionMode mode, double lambda = 0.0);

}  // namespace clucmp
