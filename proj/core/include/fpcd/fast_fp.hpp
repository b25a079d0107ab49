#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpcd/graph.hpp"
#include "fpcd/partition.hpp"
#include "fpcd/report.hpp"

namespace fpcd {

/// Structural closeness of a node pair: 2k + e (+1 if the pair is an
/// edge), where k counts common neighbors and e counts edges among the
/// common neighbors. Nonnegative; zero for pairs that share nothing.
std::int64_t pair_weight(const Graph& g, NodeId u, NodeId v);

struct CandidateEdge {
    NodeId u, v;  // u < v
    std::int64_t weight;
};

/// Sparse graph over the same node set keeping only pairs whose weight
/// reaches the threshold. Edges sorted by (u, v).
struct CandidateGraph {
    NodeId node_count = 0;
    std::int64_t threshold = 0;
    std::vector<CandidateEdge> edges;
};

/// Builds the candidate graph without touching non-adjacent pairs that
/// share no neighbor: only edges and wedge endpoints are scored. A
/// threshold <= 1 therefore still includes every edge but cannot see
/// common-neighbor-free non-edges (their weight is 0 anyway).
CandidateGraph build_candidate_graph(const Graph& g, std::int64_t threshold);

struct SeedCommunities {
    std::vector<std::vector<NodeId>> communities;  // extraction order, members ascending
    std::vector<std::int64_t> seed_weights;        // weight of each community's seed edge
    std::vector<NodeId> leftovers;                 // nodes no seed claimed
};

/// Repeatedly takes the heaviest surviving candidate edge (ties: smallest
/// (u, v)), forms a community from its endpoints plus their common
/// neighbors in the surviving candidate graph, and removes those nodes.
SeedCommunities extract_seeds(const CandidateGraph& cg);

/// Merge loop: scans live communities ordered by (size desc, id asc)
/// and merges the first pair whose cross edges satisfy 2*cross > |C1|*|C2|,
/// restarting the scan after every merge until a full scan finds no
/// qualifying pair. Cross edges are counted in the original graph.
/// Returns the number of merges performed.
std::size_t merge_phase(const Graph& g, Partition& p);

/// List-level view of merge_phase: communities must partition the node
/// set. Returns the merged communities, members ascending, ordered by
/// surviving community id.
std::vector<std::vector<NodeId>> merge_communities(const Graph& g,
                                                   std::vector<std::vector<NodeId>> communities);

struct FastFpOptions {
    std::int64_t threshold = 3;
};

struct FastFpResult {
    Partition partition;
    RunReport report;
};

/// Seed-and-merge fp heuristic: candidate graph, seed extraction,
/// leftover singletons, then merge_phase until no pair qualifies.
FastFpResult fast_fp(const Graph& g, const FastFpOptions& options = {});

}  // namespace fpcd
