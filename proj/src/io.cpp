#include "clucmp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>
#include <vector>

namespace clucmp {

Clustering parse_partition(std::istream& in, PartitionFormat format) {
  std::vector<LabeledElement> records;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (format == PartitionFormat::automatic)
      format = line.find('\t') != std::string::npos ? PartitionFormat::pairs : PartitionFormat::dense;

    if (format == PartitionFormat::dense) {
      if (line.find('\t') != std::string::npos) throw ParseError(line_no, "unexpected TAB in dense partition file");
      records.push_back({std::to_string(records.size()), line});
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected element_id<TAB>cluster_label");
    if (line.find('\t', tab + 1) != std::string::npos) throw ParseError(line_no, "more than two columns");
    std::string id = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (id.empty()) throw ParseError(line_no, "empty element id");
    if (label.empty()) throw ParseError(line_no, "empty cluster label");
    if (!seen.insert(id).second)
      throw Error(Errc::duplicate_element, "line " + std::to_string(line_no) + ": duplicate element id '" + id + "'");
    records.push_back({std::move(id), std::move(label)});
  }
  if (records.empty()) throw Error(Errc::empty_input, "partition file has no records");
  return build_clustering(records);
}

Clustering parse_partition_file(const std::filesystem::path& path, PartitionFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::usage_error, "cannot open '" + path.string() + "'");
  return parse_partition(in, format);
}

void write_partition(std::ostream& out, const Clustering& c) {
  for (std::size_t e = 0; e < c.n_elements(); ++e)
    out << c.element_ids()[e] << '\t' << c.cluster_labels()[c.membership()[e]] << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace clucmp
