#pragma once

#include <cstddef>
#include <vector>

#include "fpcd/graph.hpp"
#include "fpcd/quality.hpp"

namespace fpcd {

struct OracleResult {
    FpScore best_fp{};
    /// Every partition attaining best_fp. Communities are listed with
    /// members ascending and ordered by smallest member, so each
    /// partition has exactly one representation here.
    std::vector<std::vector<std::vector<NodeId>>> best_partitions;
    std::size_t partitions_enumerated = 0;
};

/// Exhaustive fp maximization over all set partitions of the node set,
/// enumerated via restricted growth strings (each partition visited
/// once). Comparisons are exact integer arithmetic. Throws
/// std::invalid_argument when node_count exceeds max_n or is below 2;
/// the default cap keeps the Bell-number blowup within interactive
/// reach.
OracleResult exhaustive_best_fp(const Graph& g, std::size_t max_n = 12);

}  // namespace fpcd
