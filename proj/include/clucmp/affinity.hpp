#pragma once

#include <cmath>

#include "clucmp/partition.hpp"

namespace clucmp {

/// Random walk on the element-affinity graph of a strict partition:
/// W_uv = 1 iff u and v share a cluster (self-affinity included) and
/// P = D^-1 W. Elements are indexed in the clustering's element order.
template <typename Scalar = double>
class AffinityWalk {
 public:
  AffinityWalk(const Clustering& c, Scalar damping, int max_length)
      : membership_(c.membership()), damping_(damping), max_length_(max_length) {
    if (!(damping > Scalar(0) && damping < Scalar(1)))
      throw Error(Errc::usage_error, "damping must lie in (0, 1)");
    if (max_length < 0) throw Error(Errc::usage_error, "walk length must be nonnegative");
    const auto n = static_cast<Eigen::Index>(c.n_elements());
    Matrix<Scalar> w(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index v = 0; v < n; ++v)
        w(u, v) = membership_[static_cast<std::size_t>(u)] == membership_[static_cast<std::size_t>(v)]
                      ? Scalar(1)
                      : Scalar(0);
    const Vector<Scalar> degree = w.rowwise().sum();
    transition_ = degree.cwiseInverse().asDiagonal() * w;
  }

  const Matrix<Scalar>& transition() const noexcept { return transition_; }
  Scalar damping() const noexcept { return damping_; }
  int max_length() const noexcept { return max_length_; }
  Eigen::Index size() const noexcept { return transition_.rows(); }
  std::size_t cluster_of(Eigen::Index u) const { return membership_[static_cast<std::size_t>(u)]; }

 private:
  std::vector<std::size_t> membership_;
  Matrix<Scalar> transition_;
  Scalar damping_;
  int max_length_;
};

/// Personalized PageRank from `start` truncated after max_length steps:
/// (1 - d) sum_{t=0..k} d^t e_u^T P^t.
template <typename Scalar>
Vector<Scalar> truncated_ppr(const AffinityWalk<Scalar>& walk, Eigen::Index start) {
  if (start < 0 || start >= walk.size()) throw Error(Errc::usage_error, "start element out of range");
  const Scalar d = walk.damping();
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> x = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(walk.size());
  x(start) = Scalar(1);
  Vector<Scalar> pi = Vector<Scalar>::Zero(walk.size());
  Scalar weight = Scalar(1) - d;
  for (int t = 0; t <= walk.max_length(); ++t) {
    pi += weight * x.transpose();
    x = x * walk.transition();
    weight *= d;
  }
  return pi;
}

/// Probability that k walks of `steps` steps, each started at an
/// independent uniformly random element, all end inside one common cluster.
template <typename Scalar = double>
Scalar colocated_walk_probability(const Clustering& c, int k, int steps = 1) {
  if (k < 2) throw Error(Errc::order_too_small, "co-location needs at least two walks");
  const AffinityWalk<Scalar> walk(c, Scalar(0.5), 0);
  const auto n = walk.size();
  // distribution of one walk's endpoint when the start is uniform
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> end =
      Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Constant(n, Scalar(1) / static_cast<Scalar>(n));
  for (int t = 0; t < steps; ++t) end = end * walk.transition();
  Vector<Scalar> cluster_mass = Vector<Scalar>::Zero(static_cast<Eigen::Index>(c.n_clusters()));
  for (Eigen::Index u = 0; u < n; ++u) cluster_mass(static_cast<Eigen::Index>(walk.cluster_of(u))) += end(u);
  using std::pow;
  return cluster_mass.array().pow(Scalar(k)).sum();
}

}  // namespace clucmp
