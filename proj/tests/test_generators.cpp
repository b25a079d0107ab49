#include <stdexcept>

#include "doctest.h"
#include "fpcd/generators.hpp"
#include "fpcd/partition.hpp"
#include "fpcd/quality.hpp"

using namespace fpcd;

namespace {

void check_simple(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            CHECK(v != u);
            CHECK(g.has_edge(v, u));
        }
        degree_sum += g.degree(u);
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

// community id = clique index, for generator outputs
Partition per_clique(const Graph& g, NodeId clique_size, NodeId cliques) {
    std::vector<CommunityId> assign(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) assign[u] = u / clique_size;
    REQUIRE(g.node_count() == clique_size * cliques);
    return Partition::from_assignment(g, assign);
}

}  // namespace

TEST_CASE("ring_of_cliques counts") {
    const Graph small = ring_of_cliques(3, 3);
    CHECK(small.node_count() == 9);
    CHECK(small.edge_count() == 12);
    check_simple(small);

    const Graph big = ring_of_cliques(30, 5);
    CHECK(big.node_count() == 150);
    CHECK(big.edge_count() == 330);
    check_simple(big);
}

TEST_CASE("ring_of_cliques bridge endpoints are distinct per clique") {
    const Graph g = ring_of_cliques(3, 4);
    int degree3 = 0, degree4 = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.degree(u) == 3) ++degree3;
        if (g.degree(u) == 4) ++degree4;
    }
    CHECK(degree3 == 6);
    CHECK(degree4 == 6);
}

TEST_CASE("ring_of_cliques parameter validation") {
    CHECK_THROWS_AS((void)ring_of_cliques(2, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)ring_of_cliques(3, 2), std::invalid_argument);
}

TEST_CASE("bridged_cliques counts") {
    const Graph small = bridged_cliques(3, 3);
    CHECK(small.node_count() == 12);
    CHECK(small.edge_count() == 16);
    check_simple(small);

    const Graph g = bridged_cliques(20, 5);
    CHECK(g.node_count() == 50);
    CHECK(g.edge_count() == 404);
    check_simple(g);
}

TEST_CASE("bridged_cliques has exactly four inter-clique edges") {
    const Graph g = bridged_cliques(20, 5);
    auto clique_of = [](NodeId u) { return u < 20 ? 0 : u < 40 ? 1 : u < 45 ? 2 : 3; };
    int inter = 0;
    for (const auto& [u, v] : g.edges())
        if (clique_of(u) != clique_of(v)) ++inter;
    CHECK(inter == 4);
}

TEST_CASE("bridged_cliques four-module scores") {
    const Graph g = bridged_cliques(20, 5);
    std::vector<CommunityId> assign(g.node_count());
    for (NodeId u = 0; u < 50; ++u) assign[u] = u < 20 ? 0 : u < 40 ? 1 : u < 45 ? 2 : 3;
    const Partition p = Partition::from_assignment(g, assign);
    const FpScore s = fp(g, p);
    CHECK(s.correct == 1221);
    CHECK(s.total == 1225);
    CHECK(modularity(g, p) == doctest::Approx(0.5416).epsilon(0.0001));
}

TEST_CASE("bridged_cliques parameter validation") {
    CHECK_THROWS_AS((void)bridged_cliques(5, 20), std::invalid_argument);
    CHECK_THROWS_AS((void)bridged_cliques(3, 2), std::invalid_argument);
}

TEST_CASE("ring per-clique scores") {
    const Graph g = ring_of_cliques(30, 5);
    const Partition p = per_clique(g, 5, 30);
    const FpScore s = fp(g, p);
    CHECK(s.correct == 11145);
    CHECK(s.total == 11175);
    CHECK(modularity(g, p) == doctest::Approx(0.8758).epsilon(0.0001));
}
