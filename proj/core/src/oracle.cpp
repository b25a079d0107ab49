#include "fpcd/oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace fpcd {
namespace {

/// Depth-first walk over restricted growth strings. The running correct
/// count is maintained incrementally: placing node pos into block b
/// classifies exactly the pairs (pos, v) with v < pos.
struct OracleSearch {
    const Graph& g;
    NodeId n;
    std::vector<std::vector<NodeId>> earlier;  // earlier[u] = neighbors of u below u
    std::vector<std::uint8_t> rgs;
    std::vector<std::int64_t> block_size;
    std::vector<std::vector<std::int64_t>> links;  // per-depth scratch
    std::int64_t best = -1;
    std::vector<std::vector<std::uint8_t>> argmax;
    std::size_t count = 0;

    explicit OracleSearch(const Graph& graph)
        : g(graph),
          n(graph.node_count()),
          earlier(n),
          rgs(n, 0),
          block_size(n, 0),
          links(n, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)) {
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v : g.neighbors(u))
                if (v < u) earlier[u].push_back(v);
    }

    void rec(NodeId pos, NodeId nblocks, std::int64_t correct) {
        if (pos == n) {
            ++count;
            if (correct > best) {
                best = correct;
                argmax.clear();
                argmax.push_back(rgs);
            } else if (correct == best) {
                argmax.push_back(rgs);
            }
            return;
        }
        auto& cnt = links[pos];
        for (NodeId b = 0; b <= nblocks; ++b) cnt[b] = 0;
        for (NodeId v : earlier[pos]) ++cnt[rgs[v]];
        const auto deg_e = static_cast<std::int64_t>(earlier[pos].size());
        for (NodeId b = 0; b <= nblocks; ++b) {
            // edges into block b plus non-edges into the other blocks
            const std::int64_t add = 2 * cnt[b] + pos - block_size[b] - deg_e;
            rgs[pos] = static_cast<std::uint8_t>(b);
            ++block_size[b];
            rec(pos + 1, b == nblocks ? nblocks + 1 : nblocks, correct + add);
            --block_size[b];
        }
    }
};

}  // namespace

OracleResult exhaustive_best_fp(const Graph& g, std::size_t max_n) {
    const NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("oracle needs at least 2 nodes");
    if (n > max_n) throw std::invalid_argument("node count exceeds the oracle enumeration cap");
    OracleSearch search(g);
    search.rec(0, 0, 0);

    OracleResult result;
    result.best_fp = {search.best, static_cast<std::int64_t>(n) * (n - 1) / 2};
    result.partitions_enumerated = search.count;
    result.best_partitions.reserve(search.argmax.size());
    for (const auto& rgs : search.argmax) {
        std::uint8_t nblocks = 0;
        for (std::uint8_t b : rgs) nblocks = std::max<std::uint8_t>(nblocks, b + 1);
        std::vector<std::vector<NodeId>> blocks(nblocks);
        for (NodeId u = 0; u < n; ++u) blocks[rgs[u]].push_back(u);
        result.best_partitions.push_back(std::move(blocks));
    }
    return result;
}

}  // namespace fpcd
