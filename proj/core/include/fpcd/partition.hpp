#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fpcd/graph.hpp"

namespace fpcd {

using CommunityId = std::uint32_t;

/// Node-to-community assignment with cached member lists and
/// intra-community edge counts. Community ids live in [0, id_bound());
/// slots emptied by moves and merges stay dead so live ids never change
/// meaning mid-run. Single-writer: mutation is not thread safe.
class Partition {
public:
    static Partition singletons(const Graph& g);

    /// assignment[u] = community of u; ids must be < g.node_count().
    static Partition from_assignment(const Graph& g, std::span<const CommunityId> assignment);

    /// communities[i] becomes community i. Throws if the lists do not
    /// partition the node set (missing or repeated node).
    static Partition from_communities(const Graph& g,
                                      const std::vector<std::vector<NodeId>>& communities);

    CommunityId community_of(NodeId u) const { return assignment_[u]; }
    bool alive(CommunityId c) const { return c < members_.size() && !members_[c].empty(); }
    std::int64_t size(CommunityId c) const { return static_cast<std::int64_t>(members_[c].size()); }
    std::int64_t intra_edges(CommunityId c) const { return intra_[c]; }
    std::span<const NodeId> members(CommunityId c) const { return members_[c]; }

    std::size_t community_count() const { return live_count_; }
    std::size_t id_bound() const { return members_.size(); }
    std::vector<CommunityId> live_communities() const;  // ascending

    std::int64_t total_intra() const;
    std::int64_t co_assigned_pairs() const;  // sum of size*(size-1)/2 over communities

    /// Moves u into target in O(deg(u)). The source community is removed
    /// if emptied. Throws if target is dead or equals u's community.
    void apply_move(const Graph& g, NodeId u, CommunityId target);

    /// Merges b into a (or a into b): the smaller id survives and is
    /// returned. Caches update from a single cross-edge scan of the
    /// smaller side's adjacency.
    CommunityId apply_merge(const Graph& g, CommunityId a, CommunityId b);

private:
    std::vector<CommunityId> assignment_;
    std::vector<std::uint32_t> slot_;  // node -> index in its member list
    std::vector<std::vector<NodeId>> members_;
    std::vector<std::int64_t> intra_;
    std::size_t live_count_ = 0;

    void detach(NodeId u);
};

}  // namespace fpcd
