#include "fpcd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpcd {

Graph Graph::from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.n_ = n;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;
        ++counts[static_cast<std::size_t>(u) + 1];
        ++counts[static_cast<std::size_t>(v) + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<NodeId> adj(counts.back());
    std::vector<std::uint64_t> next(counts.begin(), counts.end() - 1);
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        adj[next[u]++] = v;
        adj[next[v]++] = u;
    }
    // Sort and dedupe each row, compacting in place; w never overtakes
    // the row being processed.
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t w = 0;
    for (NodeId u = 0; u < n; ++u) {
        auto first = adj.begin() + static_cast<std::ptrdiff_t>(counts[u]);
        auto last = adj.begin() + static_cast<std::ptrdiff_t>(counts[u + 1]);
        std::sort(first, last);
        auto stop = std::unique(first, last);
        for (auto it = first; it != stop; ++it) adj[w++] = *it;
        g.offsets_[static_cast<std::size_t>(u) + 1] = w;
    }
    adj.resize(w);
    g.adj_ = std::move(adj);
    g.m_ = w / 2;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(m_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("common_neighbors requires distinct nodes");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace fpcd
