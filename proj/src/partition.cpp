#include "clucmp/partition.hpp"

#include <algorithm>

namespace clucmp {

Clustering::Clustering(std::vector<std::string> element_ids, std::vector<std::size_t> membership,
                       std::vector<std::string> cluster_labels)
    : element_ids_(std::move(element_ids)),
      membership_(std::move(membership)),
      labels_(std::move(cluster_labels)) {
  if (element_ids_.empty()) throw Error(Errc::empty_input, "clustering has no elements");
  if (membership_.size() != element_ids_.size())
    throw Error(Errc::invalid_table, "membership length differs from element count");
  sizes_.assign(labels_.size(), 0);
  index_.reserve(element_ids_.size());
  for (std::size_t e = 0; e < element_ids_.size(); ++e) {
    if (!index_.emplace(element_ids_[e], e).second)
      throw Error(Errc::duplicate_element, "duplicate element id '" + element_ids_[e] + "'");
    if (membership_[e] >= sizes_.size())
      throw Error(Errc::invalid_table, "cluster index out of range");
    ++sizes_[membership_[e]];
  }
  if (std::find(sizes_.begin(), sizes_.end(), 0) != sizes_.end())
    throw Error(Errc::invalid_table, "empty cluster");
}

std::size_t Clustering::position(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(Errc::element_set_mismatch, "unknown element id '" + id + "'");
  return it->second;
}

Clustering build_clustering(std::span<const LabeledElement> labels) {
  if (labels.empty()) throw Error(Errc::empty_input, "no labeled elements");
  std::vector<std::string> ids;
  std::vector<std::size_t> membership;
  std::vector<std::string> cluster_labels;
  std::unordered_map<std::string, std::size_t> label_index;
  ids.reserve(labels.size());
  membership.reserve(labels.size());
  for (const auto& [id, label] : labels) {
    auto [it, inserted] = label_index.emplace(label, cluster_labels.size());
    if (inserted) cluster_labels.push_back(label);
    ids.push_back(id);
    membership.push_back(it->second);
  }
  return Clustering(std::move(ids), std::move(membership), std::move(cluster_labels));
}

Clustering build_clustering(std::initializer_list<LabeledElement> labels) {
  return build_clustering(std::span<const LabeledElement>(labels.begin(), labels.size()));
}

Clustering clustering_from_labels(std::span<const int> labels) {
  std::vector<LabeledElement> records;
  records.reserve(labels.size());
  for (std::size_t e = 0; e < labels.size(); ++e)
    records.push_back({std::to_string(e), std::to_string(labels[e])});
  return build_clustering(records);
}

Clustering clustering_from_labels(std::initializer_list<int> labels) {
  return clustering_from_labels(std::span<const int>(labels.begin(), labels.size()));
}

ContingencyTable::ContingencyTable(CountMatrix counts, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : counts_(std::move(counts)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (counts_.size() == 0) throw Error(Errc::invalid_table, "empty contingency table");
  if ((counts_.array() < 0).any()) throw Error(Errc::invalid_table, "negative count");
  row_sums_ = counts_.rowwise().sum();
  col_sums_ = counts_.colwise().sum().transpose();
  n_ = counts_.sum();
  if ((row_sums_.array() == 0).any() || (col_sums_.array() == 0).any())
    throw Error(Errc::invalid_table, "contingency table has an empty row or column");
  auto default_labels = [](std::vector<std::string>& labels, Eigen::Index n) {
    if (labels.empty())
      for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    if (static_cast<Eigen::Index>(labels.size()) != n)
      throw Error(Errc::invalid_table, "label count differs from table dimension");
  };
  default_labels(row_labels_, counts_.rows());
  default_labels(col_labels_, counts_.cols());
}

bool ContingencyTable::is_product() const {
  for (Eigen::Index i = 0; i < rows(); ++i)
    for (Eigen::Index j = 0; j < cols(); ++j)
      if (counts_(i, j) * n_ != row_sums_(i) * col_sums_(j)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> paired_memberships(const Clustering& a,
                                                                    const Clustering& b) {
  if (a.n_elements() != b.n_elements())
    throw Error(Errc::element_set_mismatch, "partitions cover different numbers of elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs(a.n_elements());
  const bool same_order = a.element_ids() == b.element_ids();
  for (std::size_t e = 0; e < a.n_elements(); ++e) {
    const std::size_t in_b = same_order ? e : b.position(a.element_ids()[e]);
    pairs[e] = {a.membership()[e], b.membership()[in_b]};
  }
  return pairs;
}

ContingencyTable contingency(const Clustering& a, const Clustering& b) {
  const auto pairs = paired_memberships(a, b);
  CountMatrix counts = CountMatrix::Zero(static_cast<Eigen::Index>(a.n_clusters()),
                                         static_cast<Eigen::Index>(b.n_clusters()));
  for (const auto& [i, j] : pairs) ++counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return ContingencyTable(std::move(counts), a.cluster_labels(), b.cluster_labels());
}

ContingencyTable table_from_pairs(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                  std::size_t rows, std::size_t cols) {
  CountMatrix full = CountMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (const auto& [i, j] : pairs) ++full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  std::vector<Eigen::Index> keep_rows, keep_cols;
  for (Eigen::Index i = 0; i < full.rows(); ++i)
    if (full.row(i).sum() > 0) keep_rows.push_back(i);
  for (Eigen::Index j = 0; j < full.cols(); ++j)
    if (full.col(j).sum() > 0) keep_cols.push_back(j);
  CountMatrix counts(static_cast<Eigen::Index>(keep_rows.size()), static_cast<Eigen::Index>(keep_cols.size()));
  for (std::size_t r = 0; r < keep_rows.size(); ++r)
    for (std::size_t c = 0; c < keep_cols.size(); ++c)
      counts(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = full(keep_rows[r], keep_cols[c]);
  return ContingencyTable(std::move(counts));
}

}  // namespace clucmp
