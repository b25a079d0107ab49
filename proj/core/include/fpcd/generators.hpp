#pragma once

#include "fpcd/graph.hpp"

namespace fpcd {

/// num_cliques complete graphs of clique_size nodes arranged in a cycle,
/// one bridge edge between consecutive cliques. Bridge endpoints are the
/// lowest-id nodes of each clique not already carrying a bridge, so a
/// clique's two bridge endpoints are distinct and output is stable.
/// Requires num_cliques >= 3 and clique_size >= 3.
Graph ring_of_cliques(NodeId num_cliques, NodeId clique_size);

/// Two K_big cliques (B1, B2) and two K_small cliques (S1, S2) connected
/// by exactly four bridge edges: B1-B2, B1-S1, B2-S2, S1-S2. Endpoint
/// selection follows the same lowest-unused-id rule as ring_of_cliques.
/// Requires big >= small >= 3.
Graph bridged_cliques(NodeId big, NodeId small);

}  // namespace fpcd
