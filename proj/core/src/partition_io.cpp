#include "fpcd/partition_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace fpcd {
namespace {

constexpr std::string_view kSpace = " \t\r";
constexpr CommunityId kUnset = 0xffffffffu;

bool parse_int(std::string_view token, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::string join_labels(const std::vector<std::int64_t>& labels) {
    std::string out;
    const std::size_t shown = std::min<std::size_t>(labels.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ", ";
        out += std::to_string(labels[i]);
    }
    if (labels.size() > shown) out += ", ... (" + std::to_string(labels.size()) + " total)";
    return out;
}

}  // namespace

void write_partition(std::ostream& out, const LoadedGraph& lg, const Partition& p) {
    const NodeId n = lg.graph.node_count();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return lg.labels[a] < lg.labels[b]; });
    std::vector<CommunityId> renum(p.id_bound(), kUnset);
    CommunityId next = 0;
    for (NodeId u : order) {
        const CommunityId c = p.community_of(u);
        if (renum[c] == kUnset) renum[c] = next++;
        out << lg.labels[u] << ' ' << renum[c] << '\n';
    }
}

void write_partition_file(const std::filesystem::path& path, const LoadedGraph& lg,
                          const Partition& p) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open " + path.string());
    write_partition(out, lg, p);
    out.flush();
    if (!out) throw ParseError(0, "cannot write " + path.string());
}

Partition read_partition(std::istream& in, const LoadedGraph& lg) {
    const NodeId n = lg.graph.node_count();
    std::unordered_map<std::int64_t, NodeId> index;
    index.reserve(n);
    for (NodeId u = 0; u < n; ++u) index.emplace(lg.labels[u], u);

    std::vector<CommunityId> assignment(n, kUnset);
    std::map<std::int64_t, CommunityId> dense;  // community label -> dense id
    std::vector<std::int64_t> unknown, duplicated;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest(line);
        const std::size_t start = rest.find_first_not_of(kSpace);
        if (start == std::string_view::npos) continue;
        rest.remove_prefix(start);
        if (rest[0] == '#' || rest[0] == '%') continue;
        std::int64_t field[2];
        for (int i = 0; i < 2; ++i) {
            const std::size_t tok_end = rest.find_first_of(kSpace);
            const std::string_view token = rest.substr(0, tok_end);
            if (token.empty() || !parse_int(token, field[i]))
                throw ParseError(lineno, "expected node label and community id");
            if (tok_end == std::string_view::npos) {
                rest = {};
            } else {
                rest.remove_prefix(tok_end);
                const std::size_t next = rest.find_first_not_of(kSpace);
                rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next);
            }
            if (i == 0 && rest.empty())
                throw ParseError(lineno, "expected node label and community id");
        }
        const auto it = index.find(field[0]);
        if (it == index.end()) {
            unknown.push_back(field[0]);
            continue;
        }
        if (assignment[it->second] != kUnset) {
            duplicated.push_back(field[0]);
            continue;
        }
        const auto [slot, inserted] =
            dense.try_emplace(field[1], static_cast<CommunityId>(dense.size()));
        assignment[it->second] = slot->second;
    }

    std::vector<std::int64_t> missing;
    for (NodeId u = 0; u < n; ++u)
        if (assignment[u] == kUnset) missing.push_back(lg.labels[u]);
    if (!unknown.empty() || !duplicated.empty() || !missing.empty()) {
        std::string msg = "partition does not match graph:";
        if (!unknown.empty()) msg += " unknown node labels [" + join_labels(unknown) + "];";
        if (!duplicated.empty())
            msg += " node labels assigned twice [" + join_labels(duplicated) + "];";
        if (!missing.empty()) msg += " nodes missing [" + join_labels(missing) + "];";
        msg.pop_back();
        throw ParseError(0, msg);
    }
    return Partition::from_assignment(lg.graph, assignment);
}

Partition read_partition_file(const std::filesystem::path& path, const LoadedGraph& lg) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return read_partition(in, lg);
}

}  // namespace fpcd
