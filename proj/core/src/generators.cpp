#include "fpcd/generators.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpcd {
namespace {

void add_clique(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId base, NodeId size) {
    for (NodeId i = 0; i < size; ++i)
        for (NodeId j = i + 1; j < size; ++j) edges.emplace_back(base + i, base + j);
}

NodeId checked_node_count(std::uint64_t n) {
    if (n >= 0xffffffffull) throw std::invalid_argument("generator instance too large");
    return static_cast<NodeId>(n);
}

/// Lowest-id node of the clique [base, base+size) not yet carrying a
/// bridge; marks it used.
NodeId take_endpoint(std::vector<char>& used, NodeId base, NodeId size) {
    for (NodeId i = 0; i < size; ++i) {
        if (used[base + i]) continue;
        used[base + i] = 1;
        return base + i;
    }
    throw std::logic_error("clique has no free bridge endpoint");
}

}  // namespace

Graph ring_of_cliques(NodeId num_cliques, NodeId clique_size) {
    if (num_cliques < 3 || clique_size < 3)
        throw std::invalid_argument("ring_of_cliques requires num_cliques >= 3 and clique_size >= 3");
    NodeId n = checked_node_count(static_cast<std::uint64_t>(num_cliques) * clique_size);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(num_cliques) * clique_size * (clique_size - 1) / 2 +
                  num_cliques);
    for (NodeId c = 0; c < num_cliques; ++c) add_clique(edges, c * clique_size, clique_size);
    std::vector<char> used(n, 0);
    for (NodeId c = 0; c < num_cliques; ++c) {
        NodeId d = (c + 1) % num_cliques;
        NodeId a = take_endpoint(used, c * clique_size, clique_size);
        NodeId b = take_endpoint(used, d * clique_size, clique_size);
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
}

Graph bridged_cliques(NodeId big, NodeId small) {
    if (small < 3 || big < small)
        throw std::invalid_argument("bridged_cliques requires big >= small >= 3");
    NodeId n = checked_node_count(2ull * big + 2ull * small);
    const NodeId b1 = 0, b2 = big, s1 = 2 * big, s2 = 2 * big + small;
    std::vector<std::pair<NodeId, NodeId>> edges;
    add_clique(edges, b1, big);
    add_clique(edges, b2, big);
    add_clique(edges, s1, small);
    add_clique(edges, s2, small);
    std::vector<char> used(n, 0);
    const std::pair<std::pair<NodeId, NodeId>, std::pair<NodeId, NodeId>> bridges[] = {
        {{b1, big}, {b2, big}},
        {{b1, big}, {s1, small}},
        {{b2, big}, {s2, small}},
        {{s1, small}, {s2, small}},
    };
    for (const auto& [x, y] : bridges) {
        NodeId a = take_endpoint(used, x.first, x.second);
        NodeId b = take_endpoint(used, y.first, y.second);
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace fpcd
