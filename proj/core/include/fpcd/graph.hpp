#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fpcd {

using NodeId = std::uint32_t;

/// Immutable undirected simple graph in CSR form. Adjacency rows are
/// sorted and duplicate-free, self-loops are dropped at construction,
/// and node ids are dense in [0, n). Safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n nodes from an (unordered) edge list.
    /// Duplicate edges and self-loops are silently dropped; endpoints
    /// must be < n.
    static Graph from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    NodeId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<NodeId> adj_;
};

/// Intersection of adj(u) and adj(v), ascending. Never contains u or v
/// (no self-loops). Throws std::invalid_argument when u == v.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v);

}  // namespace fpcd
