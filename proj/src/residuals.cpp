#include "clucmp/residuals.hpp"

#include "clucmp/pair_counts.hpp"

namespace clucmp {

RIDecomposition ri_decomposition(const ContingencyTable& t) {
  const PairCounts pc = pair_counts(t);
  const ResidualField<double> rf = residuals<double>(t);
  const Vector<double> r = size_distribution<double>(t.row_sums());
  const Vector<double> c = size_distribution<double>(t.col_sums());
  const double sa = r.squaredNorm();
  const double sb = c.squaredNorm();

  RIDecomposition d;
  d.baseline = 1.0 - sa - sb + 2.0 * sa * sb;
  d.linear = 4.0 * (rf.expected_mass.array() * rf.delta.array()).sum();
  d.quadratic = 2.0 * rf.delta.squaredNorm();
  d.total = d.baseline + d.linear + d.quadratic;
  d.exact_ri = rand_index(pc);

  const auto& [A, B, T, M] = pc;
  d.pair_baseline = to_double(Rational(M * M - (A + B) * M + 2 * A * B, M * M));
  d.pair_residual = to_double(Rational(2 * (T * M - A * B), M * M));
  return d;
}

ResidualMatrix residual_matrix(const ContingencyTable& t, ResidualKind kind) {
  ResidualMatrix out;
  out.raw.resize(t.rows(), t.cols());
  if (kind == ResidualKind::mi) {
    const auto j = joint_distribution<double>(t);
    for (Eigen::Index col = 0; col < t.cols(); ++col)
      for (Eigen::Index row = 0; row < t.rows(); ++row)
        out.raw(row, col) =
            detail::xlogx_over(j.p()(row, col), j.row_marginals()(row) * j.col_marginals()(col));
  } else {
    if (t.n_elements() < 2) throw Error(Errc::too_few_elements, "ARI residuals need N >= 2");
    const BigInt m = binomial(t.n_elements(), 2);
    for (Eigen::Index col = 0; col < t.cols(); ++col)
      for (Eigen::Index row = 0; row < t.rows(); ++row) {
        const BigInt num = binomial(t.counts()(row, col), 2) * m -
                           binomial(t.row_sums()(row), 2) * binomial(t.col_sums()(col), 2);
        out.raw(row, col) = ratio(num, m);
      }
  }
  out.scale = out.raw.cwiseAbs().maxCoeff();
  out.normalized = out.scale > 0.0 ? Matrix<double>(out.raw / out.scale) : out.raw;
  return out;
}

}  // namespace clucmp
