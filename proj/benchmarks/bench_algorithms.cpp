#include <random>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "fpcd/fast_fp.hpp"
#include "fpcd/fp_greedy.hpp"
#include "fpcd/generators.hpp"

using namespace fpcd;

namespace {

// sparse random graph with roughly avg_degree * n / 2 edges
Graph sparse_random(NodeId n, double avg_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> node(0, n - 1);
    const auto target = static_cast<std::size_t>(avg_degree * n / 2);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(target);
    while (edges.size() < target) {
        const NodeId u = node(rng), v = node(rng);
        if (u != v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

void BM_fp_greedy_ring(benchmark::State& state) {
    const Graph g = ring_of_cliques(static_cast<NodeId>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(fp_greedy(g));
}
BENCHMARK(BM_fp_greedy_ring)->Arg(30)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_fp_greedy_sparse(benchmark::State& state) {
    const Graph g = sparse_random(static_cast<NodeId>(state.range(0)), 10.0, 42);
    for (auto _ : state) benchmark::DoNotOptimize(fp_greedy(g));
}
BENCHMARK(BM_fp_greedy_sparse)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_fast_fp_ring(benchmark::State& state) {
    const Graph g = ring_of_cliques(static_cast<NodeId>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(fast_fp(g));
}
BENCHMARK(BM_fast_fp_ring)->Arg(30)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_fast_fp_sparse(benchmark::State& state) {
    const Graph g = sparse_random(static_cast<NodeId>(state.range(0)), 10.0, 43);
    for (auto _ : state) benchmark::DoNotOptimize(fast_fp(g));
}
BENCHMARK(BM_fast_fp_sparse)->Arg(500)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_candidate_graph(benchmark::State& state) {
    const Graph g = sparse_random(static_cast<NodeId>(state.range(0)), 12.0, 44);
    for (auto _ : state) benchmark::DoNotOptimize(build_candidate_graph(g, 3));
}
BENCHMARK(BM_candidate_graph)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

}  // namespace
