#include "fpcd/quality.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpcd {

FpScore fp(const Graph& g, const Partition& p) {
    const auto n = static_cast<std::int64_t>(g.node_count());
    if (n < 2) throw std::invalid_argument("fp needs at least 2 nodes");
    const std::int64_t total = n * (n - 1) / 2;
    const std::int64_t intra = p.total_intra();
    const std::int64_t co = p.co_assigned_pairs();
    const auto m = static_cast<std::int64_t>(g.edge_count());
    // intra edges + separated non-edges; the latter is all pairs minus
    // co-assigned pairs minus cross edges.
    const std::int64_t correct = intra + (total - co - (m - intra));
    return {correct, total};
}

double modularity(const Graph& g, const Partition& p, double gamma) {
    if (g.edge_count() == 0) throw std::invalid_argument("modularity needs at least 1 edge");
    const auto m = static_cast<double>(g.edge_count());
    // Community terms are summed in a canonical order so that equal
    // partitions give bit-identical results however their ids are
    // numbered (e.g. after a partition-file round trip).
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (intra, deg_sum)
    terms.reserve(p.community_count());
    for (CommunityId c : p.live_communities()) {
        std::int64_t deg_sum = 0;
        for (NodeId u : p.members(c)) deg_sum += g.degree(u);
        terms.emplace_back(p.intra_edges(c), deg_sum);
    }
    std::sort(terms.begin(), terms.end());
    double q = 0.0;
    for (const auto& [intra, deg_sum] : terms) {
        const double frac = static_cast<double>(deg_sum) / (2.0 * m);
        q += static_cast<double>(intra) / m - gamma * frac * frac;
    }
    return q;
}

MoveDelta move_delta(const Graph& g, const Partition& p, NodeId u, CommunityId target) {
    const CommunityId source = p.community_of(u);
    if (target == source) throw std::invalid_argument("move target equals current community");
    if (!p.alive(target)) throw std::invalid_argument("move target is not a live community");
    std::int64_t d_a = 0, d_b = 0;
    for (NodeId v : g.neighbors(u)) {
        const CommunityId c = p.community_of(v);
        if (c == source)
            ++d_a;
        else if (c == target)
            ++d_b;
    }
    return (p.size(source) - 1 - 2 * d_a) + (2 * d_b - p.size(target));
}

MergeDelta merge_delta(const Partition& p, CommunityId a, CommunityId b,
                       std::int64_t cross_edge_count) {
    if (a == b) throw std::invalid_argument("cannot merge a community with itself");
    return 2 * cross_edge_count - p.size(a) * p.size(b);
}

std::int64_t cross_edges(const Graph& g, const Partition& p, CommunityId a, CommunityId b) {
    if (p.size(a) > p.size(b)) std::swap(a, b);
    std::int64_t count = 0;
    for (NodeId u : p.members(a))
        for (NodeId v : g.neighbors(u))
            if (p.community_of(v) == b) ++count;
    return count;
}

}  // namespace fpcd
