#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fpcd/graph.hpp"
#include "fpcd/partition.hpp"
#include "fpcd/quality.hpp"

namespace fpcd {

enum class SweepOrder { Ascending, Random };

struct FpGreedyOptions {
    SweepOrder order = SweepOrder::Ascending;
    std::uint64_t seed = 0;  // used only when order == Random
};

/// Counters for one run. deltas holds the numerator gain of every
/// accepted move/merge in order; each entry is strictly positive, which
/// is what bounds the run by n(n-1)/2 accepted changes.
struct GreedyStats {
    std::size_t node_passes = 0;
    std::size_t merge_passes = 0;
    std::size_t moves = 0;
    std::size_t merges = 0;
    std::int64_t initial_numerator = 0;
    std::vector<std::int64_t> deltas;
    FpScore final_fp{};
};

/// One sweep of single-node moves. Each node is offered the neighbor
/// community with the best strictly positive move_delta (ties: smallest
/// community id); moves take effect immediately within the sweep.
/// `order` overrides the default ascending node order and must be a
/// permutation of all nodes. Returns whether any node moved.
bool node_pass(const Graph& g, Partition& p, std::span<const NodeId> order = {},
               GreedyStats* stats = nullptr);

/// One sweep of pairwise community merges. Each live community is merged
/// with the adjacent community of best strictly positive merge_delta
/// (ties: smallest id); the smaller id survives and the sweep continues
/// over the remaining snapshot. `order` overrides the default ascending
/// sweep over live communities. Returns whether any merge happened.
bool merge_pass(const Graph& g, Partition& p, std::span<const CommunityId> order = {},
                GreedyStats* stats = nullptr);

struct FpGreedyResult {
    Partition partition;
    GreedyStats stats;
};

/// Two-level greedy fp maximizer. Starts from singletons, runs node
/// passes until none moves, then one merge pass; repeats until a
/// node-stable state is also merge-stable. Every accepted change
/// strictly raises the integer fp numerator, so termination is
/// guaranteed. Deterministic for a fixed order/seed.
FpGreedyResult fp_greedy(const Graph& g, const FpGreedyOptions& options = {});

}  // namespace fpcd
