#include <random>

#include <benchmark/benchmark.h>

#include "fpcd/generators.hpp"
#include "fpcd/partition.hpp"
#include "fpcd/quality.hpp"

using namespace fpcd;

namespace {

Partition per_clique(const Graph& g, NodeId clique_size) {
    std::vector<CommunityId> assign(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) assign[u] = u / clique_size;
    return Partition::from_assignment(g, assign);
}

void BM_fp_score(benchmark::State& state) {
    const auto cliques = static_cast<NodeId>(state.range(0));
    const Graph g = ring_of_cliques(cliques, 10);
    const Partition p = per_clique(g, 10);
    for (auto _ : state) benchmark::DoNotOptimize(fp(g, p));
}
BENCHMARK(BM_fp_score)->Arg(30)->Arg(300)->Arg(3000);

void BM_modularity(benchmark::State& state) {
    const auto cliques = static_cast<NodeId>(state.range(0));
    const Graph g = ring_of_cliques(cliques, 10);
    const Partition p = per_clique(g, 10);
    for (auto _ : state) benchmark::DoNotOptimize(modularity(g, p));
}
BENCHMARK(BM_modularity)->Arg(30)->Arg(300)->Arg(3000);

void BM_move_delta(benchmark::State& state) {
    const Graph g = ring_of_cliques(100, 10);
    const Partition p = per_clique(g, 10);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<NodeId> node(0, g.node_count() - 1);
    for (auto _ : state) {
        const NodeId u = node(rng);
        const CommunityId target = (p.community_of(u) + 1) % 100;
        benchmark::DoNotOptimize(move_delta(g, p, u, target));
    }
}
BENCHMARK(BM_move_delta);

void BM_cross_edges(benchmark::State& state) {
    const Graph g = ring_of_cliques(100, 10);
    const Partition p = per_clique(g, 10);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<CommunityId> comm(0, 99);
    for (auto _ : state) {
        const CommunityId a = comm(rng);
        const CommunityId b = (a + 1 + comm(rng) % 99) % 100;
        benchmark::DoNotOptimize(cross_edges(g, p, a, b));
    }
}
BENCHMARK(BM_cross_edges);

}  // namespace

BENCHMARK_MAIN();
