#include "fpcd/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpcd/quality.hpp"

namespace fpcd {

namespace {
constexpr CommunityId kUnassigned = 0xffffffffu;
}

Partition Partition::singletons(const Graph& g) {
    const NodeId n = g.node_count();
    Partition p;
    p.assignment_.resize(n);
    p.slot_.assign(n, 0);
    p.members_.resize(n);
    p.intra_.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        p.assignment_[u] = u;
        p.members_[u] = {u};
    }
    p.live_count_ = n;
    return p;
}

Partition Partition::from_assignment(const Graph& g, std::span<const CommunityId> assignment) {
    const NodeId n = g.node_count();
    if (assignment.size() != n) throw std::invalid_argument("assignment size must equal node count");
    Partition p;
    p.assignment_.assign(assignment.begin(), assignment.end());
    CommunityId bound = 0;
    for (CommunityId c : assignment) {
        if (c >= n) throw std::invalid_argument("community id out of range");
        bound = std::max(bound, c + 1);
    }
    p.members_.resize(bound);
    p.intra_.assign(bound, 0);
    p.slot_.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        auto& mem = p.members_[assignment[u]];
        p.slot_[u] = static_cast<std::uint32_t>(mem.size());
        mem.push_back(u);
    }
    for (const auto& mem : p.members_)
        if (!mem.empty()) ++p.live_count_;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && p.assignment_[u] == p.assignment_[v]) ++p.intra_[p.assignment_[u]];
    return p;
}

Partition Partition::from_communities(const Graph& g,
                                      const std::vector<std::vector<NodeId>>& communities) {
    const NodeId n = g.node_count();
    std::vector<CommunityId> assignment(n, kUnassigned);
    for (std::size_t c = 0; c < communities.size(); ++c) {
        for (NodeId u : communities[c]) {
            if (u >= n) throw std::invalid_argument("community member out of range");
            if (assignment[u] != kUnassigned) throw std::invalid_argument("node in two communities");
            assignment[u] = static_cast<CommunityId>(c);
        }
    }
    for (NodeId u = 0; u < n; ++u)
        if (assignment[u] == kUnassigned) throw std::invalid_argument("node in no community");
    return from_assignment(g, assignment);
}

std::vector<CommunityId> Partition::live_communities() const {
    std::vector<CommunityId> out;
    out.reserve(live_count_);
    for (CommunityId c = 0; c < members_.size(); ++c)
        if (!members_[c].empty()) out.push_back(c);
    return out;
}

std::int64_t Partition::total_intra() const {
    std::int64_t sum = 0;
    for (std::int64_t x : intra_) sum += x;
    return sum;
}

std::int64_t Partition::co_assigned_pairs() const {
    std::int64_t sum = 0;
    for (const auto& mem : members_) {
        const auto s = static_cast<std::int64_t>(mem.size());
        sum += s * (s - 1) / 2;
    }
    return sum;
}

void Partition::apply_move(const Graph& g, NodeId u, CommunityId target) {
    const CommunityId source = assignment_[u];
    if (target == source) throw std::invalid_argument("move target equals current community");
    if (!alive(target)) throw std::invalid_argument("move target is not a live community");
    std::int64_t d_src = 0, d_tgt = 0;
    for (NodeId v : g.neighbors(u)) {
        const CommunityId c = assignment_[v];
        if (c == source)
            ++d_src;
        else if (c == target)
            ++d_tgt;
    }
    detach(u);
    intra_[source] -= d_src;
    if (members_[source].empty()) --live_count_;
    assignment_[u] = target;
    slot_[u] = static_cast<std::uint32_t>(members_[target].size());
    members_[target].push_back(u);
    intra_[target] += d_tgt;
}

CommunityId Partition::apply_merge(const Graph& g, CommunityId a, CommunityId b) {
    if (a == b) throw std::invalid_argument("cannot merge a community with itself");
    if (!alive(a) || !alive(b)) throw std::invalid_argument("cannot merge a dead community");
    const CommunityId keep = std::min(a, b);
    const CommunityId drop = std::max(a, b);
    const std::int64_t cross = cross_edges(g, *this, keep, drop);
    auto& km = members_[keep];
    auto& dm = members_[drop];
    km.reserve(km.size() + dm.size());
    for (NodeId u : dm) {
        assignment_[u] = keep;
        slot_[u] = static_cast<std::uint32_t>(km.size());
        km.push_back(u);
    }
    dm.clear();
    dm.shrink_to_fit();
    intra_[keep] += intra_[drop] + cross;
    intra_[drop] = 0;
    --live_count_;
    return keep;
}

void Partition::detach(NodeId u) {
    auto& mem = members_[assignment_[u]];
    const std::uint32_t s = slot_[u];
    const NodeId last = mem.back();
    mem[s] = last;
    slot_[last] = s;
    mem.pop_back();
}

}  // namespace fpcd
