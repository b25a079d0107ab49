#pragma once

#include <cstdint>

#include "fpcd/graph.hpp"
#include "fpcd/partition.hpp"

namespace fpcd {

/// Performance score as an exact rational: correct pair count over
/// n(n-1)/2. Kept in integers so greedy comparisons are exact; convert
/// to double only for reporting.
struct FpScore {
    std::int64_t correct = 0;
    std::int64_t total = 0;

    double value() const { return static_cast<double>(correct) / static_cast<double>(total); }

    friend bool operator==(const FpScore&, const FpScore&) = default;
};

/// Signed change to FpScore.correct caused by a node move / a merge.
using MoveDelta = std::int64_t;
using MergeDelta = std::int64_t;

/// Fraction of correctly interpreted node pairs: intra-community edges
/// plus inter-community non-edges, over all pairs. Non-edges are counted
/// algebraically, never enumerated. Throws for n < 2.
FpScore fp(const Graph& g, const Partition& p);

/// Newman-Girvan modularity with resolution gamma, computed per
/// community as intra/m - gamma*(deg_sum/2m)^2. Throws for m = 0.
double modularity(const Graph& g, const Partition& p, double gamma = 1.0);

/// Change to fp's numerator if u moved from its community A to target B:
/// (|A| - 1 - 2*d_A) + (2*d_B - |B|), where d_X counts u's neighbors in
/// X. Only pairs containing u change classification. Throws when target
/// is u's current community or dead.
MoveDelta move_delta(const Graph& g, const Partition& p, NodeId u, CommunityId target);

/// Change to fp's numerator if a and b merged, given their cross-edge
/// count: 2*e_cc - |a|*|b|. Positive iff the merge strictly improves fp.
/// Throws when a == b.
MergeDelta merge_delta(const Partition& p, CommunityId a, CommunityId b,
                       std::int64_t cross_edge_count);

/// Number of edges with one endpoint in a and the other in b, found by
/// scanning the smaller community's adjacency. Requires a != b.
std::int64_t cross_edges(const Graph& g, const Partition& p, CommunityId a, CommunityId b);

}  // namespace fpcd
