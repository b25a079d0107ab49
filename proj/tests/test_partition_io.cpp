#include <sstream>

#include "doctest.h"
#include "fpcd/partition_io.hpp"
#include "fpcd/report.hpp"

using namespace fpcd;

namespace {

LoadedGraph triangle_with_labels() {
    std::istringstream in("5 7\n7 9\n9 5\n");
    return load_edge_list(in);
}

}  // namespace

TEST_CASE("write uses external labels and dense community numbers") {
    const LoadedGraph lg = triangle_with_labels();
    const Partition p = Partition::from_communities(lg.graph, {{0, 1}, {2}});
    std::ostringstream out;
    write_partition(out, lg, p);
    CHECK(out.str() == "5 0\n7 0\n9 1\n");
}

TEST_CASE("community renumbering is independent of internal ids") {
    const LoadedGraph lg = triangle_with_labels();
    // same structure, different internal community ids
    const Partition p = Partition::from_communities(lg.graph, {{2}, {0, 1}});
    std::ostringstream out;
    write_partition(out, lg, p);
    CHECK(out.str() == "5 0\n7 0\n9 1\n");
}

TEST_CASE("read round trip preserves the structure") {
    const LoadedGraph lg = triangle_with_labels();
    std::istringstream in("5 4\n7 4\n9 17\n");  // arbitrary community ids
    const Partition p = read_partition(in, lg);
    CHECK(p.community_of(0) == p.community_of(1));
    CHECK(p.community_of(0) != p.community_of(2));
    CHECK(p.community_count() == 2);
}

TEST_CASE("read rejects unknown, duplicate and missing labels") {
    const LoadedGraph lg = triangle_with_labels();

    std::istringstream unknown("5 0\n7 0\n9 1\n11 1\n");
    CHECK_THROWS_WITH_AS((void)read_partition(unknown, lg),
                         doctest::Contains("unknown node labels [11]"), ParseError);

    std::istringstream dup("5 0\n7 0\n7 1\n9 1\n");
    CHECK_THROWS_WITH_AS((void)read_partition(dup, lg),
                         doctest::Contains("assigned twice [7]"), ParseError);

    std::istringstream missing("5 0\n7 0\n");
    CHECK_THROWS_WITH_AS((void)read_partition(missing, lg),
                         doctest::Contains("missing [9]"), ParseError);

    std::istringstream garbage("5 zero\n");
    CHECK_THROWS_AS((void)read_partition(garbage, lg), ParseError);
}

TEST_CASE("module_size_histogram groups ascending by size") {
    const LoadedGraph lg = [] {
        std::istringstream in("0 1\n2 3\n4 5\n6 6\n6 0\n");
        return load_edge_list(in);
    }();
    // sizes: 3 (0,1,6), 2 (2,3), 1, 1 (4) (5)
    const Partition p =
        Partition::from_communities(lg.graph, {{0, 1, 6}, {2, 3}, {4}, {5}});
    const auto hist = module_size_histogram(p);
    REQUIRE(hist.size() == 3);
    CHECK(hist[0] == std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(hist[1] == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(hist[2] == std::pair<std::int64_t, std::int64_t>{3, 1});
}
