#include "clucmp/renyi.hpp"

#include <cmath>

#include "clucmp/pair_counts.hpp"

namespace clucmp {

namespace {

double smoothed(double sum, double total, Eigen::Index terms, double lambda) {
  const double pad = static_cast<double>(terms) * lambda;
  return (sum + pad) / (total + pad);
}

double power_sum(const Vector<double>& p, double alpha) {
  double s = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) s += std::pow(p(i), alpha);
  return s;
}

Rational smoothed(const BigInt& sum, const BigInt& total, Eigen::Index terms, double lambda) {
  if (lambda == 0.0) return Rational(sum, total);
  const Rational pad = Rational(terms) * Rational(lambda);
  return (Rational(sum) + pad) / (Rational(total) + pad);
}

}  // namespace

CollisionEstimate collision_probability(const ContingencyTable& t, double order, CollisionMode mode,
                                        double lambda) {
  if (!(lambda >= 0.0)) throw Error(Errc::usage_error, "smoothing lambda must be nonnegative");
  CollisionEstimate est;
  est.order = order;
  est.mode = mode;
  est.smoothing_lambda = lambda;
  const Eigen::Index ka = t.rows(), kb = t.cols();

  if (mode == CollisionMode::with_replacement) {
    if (!(order > 0.0)) throw Error(Errc::invalid_order, "collision order must be positive");
    const auto j = joint_distribution<double>(t);
    const Eigen::Map<const Vector<double>> cells(j.p().data(), j.p().size());
    est.c_a = smoothed(power_sum(j.row_marginals(), order), 1.0, ka, lambda);
    est.c_b = smoothed(power_sum(j.col_marginals(), order), 1.0, kb, lambda);
    est.c_joint = smoothed(power_sum(cells, order), 1.0, ka * kb, lambda);
    return est;
  }

  const double rounded = std::round(order);
  if (rounded != order) throw Error(Errc::invalid_order, "without-replacement collisions need an integer order");
  const TupleCounts tc = tuple_counts(t, static_cast<int>(rounded));
  est.c_a = to_double(smoothed(tc.a_tuples, tc.m_tuples, ka, lambda));
  est.c_b = to_double(smoothed(tc.b_tuples, tc.m_tuples, kb, lambda));
  est.c_joint = to_double(smoothed(tc.t_tuples, tc.m_tuples, ka * kb, lambda));
  return est;
}

RenyiReport renyi_contrast(const ContingencyTable& t, double alpha, CollisionMode mode, double lambda) {
  if (!(alpha > 0.0)) throw Error(Errc::invalid_order, "Renyi order must be positive");
  RenyiReport rep;
  rep.alpha = alpha;
  if (mode == CollisionMode::with_replacement && std::abs(alpha - 1.0) <= 1e-9) {
    const auto j = joint_distribution<double>(t);
    rep.h_a = entropy(j.row_marginals());
    rep.h_b = entropy(j.col_marginals());
    rep.h_joint = entropy(j.p());
    rep.j_alpha = mutual_information(j);
    return rep;
  }
  if (alpha == 1.0) throw Error(Errc::invalid_order, "without-replacement contrasts need an integer order >= 2");
  rep.collisions = collision_probability(t, alpha, mode, lambda);
  const auto& c = rep.collisions;
  if (!(c.c_a > 0.0 && c.c_b > 0.0 && c.c_joint > 0.0))
    throw Error(Errc::zero_collision, "empty collision sum at order " + std::to_string(alpha) +
                                          "; use a smoothing lambda > 0");
  const double scale = 1.0 / (1.0 - alpha);
  rep.h_a = std::log(c.c_a) * scale;
  rep.h_b = std::log(c.c_b) * scale;
  rep.h_joint = std::log(c.c_joint) * scale;
  rep.j_alpha = (std::log(c.c_a) + std::log(c.c_b) - std::log(c.c_joint)) * scale;
  return rep;
}

std::vector<double> lagrange_weights_at_one(int k) {
  if (k < 2) throw Error(Errc::invalid_order, "extrapolation needs at least the order-2 node");
  std::vector<double> w;
  for (int m = 2; m <= k; ++m) {
    double l = 1.0;
    for (int node = 2; node <= k; ++node)
      if (node != m) l *= static_cast<double>(1 - node) / static_cast<double>(m - node);
    w.push_back(l);
  }
  return w;
}

KTupleEstimate mi_ktuple(const ContingencyTable& t, int k, CollisionMode mode, double lambda) {
  KTupleEstimate est;
  est.order = k;
  est.weights = lagrange_weights_at_one(k);
  for (int alpha = 2; alpha <= k; ++alpha)
    est.contrasts.push_back(renyi_contrast(t, alpha, mode, lambda).j_alpha);
  for (std::size_t m = 0; m < est.weights.size(); ++m) est.value += est.weights[m] * est.contrasts[m];
  return est;
}

}  // namespace clucmp
