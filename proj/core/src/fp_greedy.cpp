#include "fpcd/fp_greedy.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace fpcd {

bool node_pass(const Graph& g, Partition& p, std::span<const NodeId> order, GreedyStats* stats) {
    std::vector<NodeId> ascending;
    if (order.empty()) {
        ascending.resize(g.node_count());
        std::iota(ascending.begin(), ascending.end(), NodeId{0});
        order = ascending;
    }
    // links[c] = neighbors of the current node in community c, for the
    // communities touched by its adjacency scan; reset between nodes.
    std::vector<std::int64_t> links(p.id_bound(), 0);
    std::vector<CommunityId> touched;
    bool moved_any = false;
    for (NodeId u : order) {
        const CommunityId source = p.community_of(u);
        touched.clear();
        for (NodeId v : g.neighbors(u)) {
            const CommunityId c = p.community_of(v);
            if (links[c] == 0) touched.push_back(c);
            ++links[c];
        }
        const std::int64_t leave_gain = p.size(source) - 1 - 2 * links[source];
        MoveDelta best_delta = 0;
        CommunityId best = source;
        for (CommunityId c : touched) {
            if (c == source) continue;
            const MoveDelta delta = leave_gain + 2 * links[c] - p.size(c);
            if (delta > best_delta || (delta == best_delta && best != source && c < best)) {
                best_delta = delta;
                best = c;
            }
        }
        for (CommunityId c : touched) links[c] = 0;
        if (best == source) continue;  // no strictly positive move
        p.apply_move(g, u, best);
        moved_any = true;
        if (stats) {
            ++stats->moves;
            stats->deltas.push_back(best_delta);
        }
    }
    if (stats) ++stats->node_passes;
    return moved_any;
}

bool merge_pass(const Graph& g, Partition& p, std::span<const CommunityId> order,
                GreedyStats* stats) {
    std::vector<CommunityId> snapshot;
    if (order.empty()) {
        snapshot = p.live_communities();
        order = snapshot;
    }
    // cross[c] = edges between the community under scan and community c.
    std::vector<std::int64_t> cross(p.id_bound(), 0);
    std::vector<CommunityId> touched;
    bool merged_any = false;
    for (CommunityId ci : order) {
        if (!p.alive(ci)) continue;  // absorbed earlier in this sweep
        touched.clear();
        for (NodeId u : p.members(ci)) {
            for (NodeId v : g.neighbors(u)) {
                const CommunityId c = p.community_of(v);
                if (c == ci) continue;
                if (cross[c] == 0) touched.push_back(c);
                ++cross[c];
            }
        }
        MergeDelta best_delta = 0;
        CommunityId best = ci;
        for (CommunityId c : touched) {
            const MergeDelta delta = 2 * cross[c] - p.size(ci) * p.size(c);
            if (delta > best_delta || (delta == best_delta && best != ci && c < best)) {
                best_delta = delta;
                best = c;
            }
        }
        for (CommunityId c : touched) cross[c] = 0;
        if (best == ci) continue;
        p.apply_merge(g, ci, best);
        merged_any = true;
        if (stats) {
            ++stats->merges;
            stats->deltas.push_back(best_delta);
        }
    }
    if (stats) ++stats->merge_passes;
    return merged_any;
}

FpGreedyResult fp_greedy(const Graph& g, const FpGreedyOptions& options) {
    if (g.node_count() < 2) throw std::invalid_argument("fp_greedy needs at least 2 nodes");
    Partition p = Partition::singletons(g);
    GreedyStats stats;
    stats.initial_numerator = fp(g, p).correct;
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::mt19937_64 rng(options.seed);
    for (;;) {
        for (;;) {
            if (options.order == SweepOrder::Random) std::shuffle(order.begin(), order.end(), rng);
            if (!node_pass(g, p, order, &stats)) break;
        }
        if (!merge_pass(g, p, {}, &stats)) break;
    }
    stats.final_fp = fp(g, p);
    return {std::move(p), std::move(stats)};
}

}  // namespace fpcd
