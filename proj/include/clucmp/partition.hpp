#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clucmp/error.hpp"

namespace clucmp {

using Count = std::int64_t;
using CountMatrix = Eigen::Matrix<Count, Eigen::Dynamic, Eigen::Dynamic>;
using CountVector = Eigen::Matrix<Count, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct LabeledElement {
  std::string id;
  std::string label;
};

/// A hard partition of N elements into nonempty, disjoint clusters.
///
/// Cluster indices follow the first appearance of each label in the input,
/// so tables built from the same files are reproducible row for row.
class Clustering {
 public:
  Clustering(std::vector<std::string> element_ids, std::vector<std::size_t> membership,
             std::vector<std::string> cluster_labels);

  std::size_t n_elements() const noexcept { return element_ids_.size(); }
  std::size_t n_clusters() const noexcept { return sizes_.size(); }

  const std::vector<std::string>& element_ids() const noexcept { return element_ids_; }
  /// Cluster index of each element, aligned with element_ids().
  const std::vector<std::size_t>& membership() const noexcept { return membership_; }
  const std::vector<Count>& cluster_sizes() const noexcept { return sizes_; }
  const std::vector<std::string>& cluster_labels() const noexcept { return labels_; }

  bool contains(const std::string& id) const { return index_.contains(id); }
  std::size_t position(const std::string& id) const;
  std::size_t cluster_of(const std::string& id) const { return membership_[position(id)]; }

 private:
  std::vector<std::string> element_ids_;
  std::vector<std::size_t> membership_;
  std::vector<Count> sizes_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

Clustering build_clustering(std::span<const LabeledElement> labels);
Clustering build_clustering(std::initializer_list<LabeledElement> labels);

/// Element ids "0".."n-1"; cluster labels are the decimal form of each entry.
Clustering clustering_from_labels(std::span<const int> labels);
Clustering clustering_from_labels(std::initializer_list<int> labels);

/// Overlap counts n_ij between the clusters of two partitions.
class ContingencyTable {
 public:
  /// Every row and column must have positive mass (empty clusters do not exist).
  explicit ContingencyTable(CountMatrix counts, std::vector<std::string> row_labels = {},
                            std::vector<std::string> col_labels = {});

  const CountMatrix& counts() const noexcept { return counts_; }
  const CountVector& row_sums() const noexcept { return row_sums_; }
  const CountVector& col_sums() const noexcept { return col_sums_; }
  Count n_elements() const noexcept { return n_; }
  Eigen::Index rows() const noexcept { return counts_.rows(); }
  Eigen::Index cols() const noexcept { return counts_.cols(); }

  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  /// True when n_ij * N == a_i * b_j in every cell.
  bool is_product() const;

 private:
  CountMatrix counts_;
  CountVector row_sums_;
  CountVector col_sums_;
  Count n_ = 0;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

ContingencyTable contingency(const Clustering& a, const Clustering& b);

/// (cluster in a, cluster in b) for every element, in a's element order.
std::vector<std::pair<std::size_t, std::size_t>> paired_memberships(const Clustering& a,
                                                                    const Clustering& b);

/// Builds a table from per-element cluster pairs, dropping clusters that
/// received no element.
ContingencyTable table_from_pairs(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                  std::size_t rows, std::size_t cols);

/// Joint label distribution p_ij with its marginals.
template <typename Scalar = double>
class JointDistribution {
 public:
  explicit JointDistribution(Matrix<Scalar> p) : p_(std::move(p)) {
    if (p_.size() == 0) throw Error(Errc::not_a_distribution, "empty joint distribution");
    if ((p_.array() < Scalar(0)).any())
      throw Error(Errc::not_a_distribution, "negative joint probability");
    using std::abs;
    if (abs(p_.sum() - Scalar(1)) > Scalar(1e-12))
      throw Error(Errc::not_a_distribution, "joint probabilities do not sum to 1");
    rows_ = p_.rowwise().sum();
    cols_ = p_.colwise().sum().transpose();
  }

  const Matrix<Scalar>& p() const noexcept { return p_; }
  const Vector<Scalar>& row_marginals() const noexcept { return rows_; }
  const Vector<Scalar>& col_marginals() const noexcept { return cols_; }
  Eigen::Index rows() const noexcept { return p_.rows(); }
  Eigen::Index cols() const noexcept { return p_.cols(); }

  /// Outer product p_i. p_.j, the independence coupling with these marginals.
  Matrix<Scalar> independent_mass() const { return rows_ * cols_.transpose(); }

 private:
  Matrix<Scalar> p_;
  Vector<Scalar> rows_;
  Vector<Scalar> cols_;
};

template <typename Scalar = double>
JointDistribution<Scalar> joint_distribution(const ContingencyTable& t) {
  const Scalar n = static_cast<Scalar>(t.n_elements());
  Matrix<Scalar> p = t.counts().template cast<Scalar>() / n;
  return JointDistribution<Scalar>(std::move(p));
}

/// Cluster-size distribution a_i / N of one partition.
template <typename Scalar = double>
Vector<Scalar> size_distribution(const CountVector& sizes) {
  return sizes.template cast<Scalar>() / static_cast<Scalar>(sizes.sum());
}

}  // namespace clucmp
