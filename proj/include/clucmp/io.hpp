#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "clucmp/partition.hpp"

namespace clucmp {

/// pairs: "element_id<TAB>cluster_label" per line.
/// dense: one cluster label per line; element ids are the 0-based record index.
/// auto: pairs if the first record contains a TAB, dense otherwise.
/// In every format, lines starting with '#' and blank lines are skipped.
enum class PartitionFormat { automatic, pairs, dense };

Clustering parse_partition(std::istream& in, PartitionFormat format = PartitionFormat::automatic);
Clustering parse_partition_file(const std::filesystem::path& path,
                                PartitionFormat format = PartitionFormat::automatic);

/// Two-column form, elements in clustering order.
void write_partition(std::ostream& out, const Clustering& c);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& s);

}  // namespace clucmp
