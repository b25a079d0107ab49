#include "fpcd/edge_list.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace fpcd {
namespace {

constexpr std::string_view kSpace = " \t\r";

bool parse_label(std::string_view token, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

LoadedGraph restrict_to_largest_component(const Graph& g, std::vector<std::int64_t> labels) {
    const NodeId n = g.node_count();
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> comp(n, kNone);
    std::vector<std::uint64_t> comp_size;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != kNone) continue;
        const auto c = static_cast<std::uint32_t>(comp_size.size());
        comp[s] = c;
        std::uint64_t size = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : g.neighbors(u)) {
                if (comp[v] != kNone) continue;
                comp[v] = c;
                ++size;
                stack.push_back(v);
            }
        }
        comp_size.push_back(size);
    }
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < comp_size.size(); ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    std::vector<NodeId> remap(n, kNone);
    std::vector<std::int64_t> kept_labels;
    kept_labels.reserve(comp_size[best]);
    NodeId next_id = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] != best) continue;
        remap[u] = next_id++;
        kept_labels.push_back(labels[u]);
    }
    std::vector<std::pair<NodeId, NodeId>> kept_edges;
    for (auto [u, v] : g.edges())
        if (comp[u] == best && comp[v] == best) kept_edges.emplace_back(remap[u], remap[v]);
    return {Graph::from_edges(next_id, kept_edges), std::move(kept_labels)};
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
    std::unordered_map<std::int64_t, NodeId> ids;
    std::vector<std::int64_t> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto intern = [&](std::int64_t label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest(line);
        std::size_t start = rest.find_first_not_of(kSpace);
        if (start == std::string_view::npos) continue;
        rest.remove_prefix(start);
        if (rest[0] == '#' || rest[0] == '%') continue;
        std::int64_t lab[2];
        for (int i = 0; i < 2; ++i) {
            std::size_t tok_end = rest.find_first_of(kSpace);
            std::string_view token = rest.substr(0, tok_end);
            if (token.empty() || !parse_label(token, lab[i]))
                throw ParseError(lineno, "expected two integer node labels");
            if (tok_end == std::string_view::npos) {
                rest = {};
            } else {
                rest.remove_prefix(tok_end);
                std::size_t next = rest.find_first_not_of(kSpace);
                rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next);
            }
            if (i == 0 && rest.empty())
                throw ParseError(lineno, "expected two integer node labels");
        }
        const NodeId a = intern(lab[0]);  // sequenced: labels follow first appearance
        const NodeId b = intern(lab[1]);
        edges.emplace_back(a, b);
    }
    Graph g = Graph::from_edges(static_cast<NodeId>(labels.size()), edges);
    if (g.edge_count() == 0) throw ParseError(0, "input contains no edges");
    if (options.keep_largest_component)
        return restrict_to_largest_component(g, std::move(labels));
    return {std::move(g), std::move(labels)};
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return load_edge_list(in, options);
}

}  // namespace fpcd
