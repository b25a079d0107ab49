#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "fpcd/edge_list.hpp"
#include "fpcd/graph.hpp"
#include "fpcd/partition.hpp"

namespace fpcd {

/// Writes one "external_label community_id" line per node, sorted by
/// external label. Community ids are renumbered densely from 0 in order
/// of first appearance so output is independent of internal id history.
void write_partition(std::ostream& out, const LoadedGraph& lg, const Partition& p);
void write_partition_file(const std::filesystem::path& path, const LoadedGraph& lg,
                          const Partition& p);

/// Reads a partition in the same format back onto lg's node set.
/// Throws ParseError on malformed lines, labels not present in the
/// graph, duplicate labels, or nodes left unassigned; the message names
/// the offending external labels.
Partition read_partition(std::istream& in, const LoadedGraph& lg);
Partition read_partition_file(const std::filesystem::path& path, const LoadedGraph& lg);

}  // namespace fpcd
