#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpcd/graph.hpp"

namespace fpcd {

/// Parse failure with a 1-based input line number (0 = whole input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what
                                       : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct LoadOptions {
    bool keep_largest_component = false;
};

struct LoadedGraph {
    Graph graph;
    std::vector<std::int64_t> labels;  // internal id -> original label
};

/// Reads a whitespace-separated edge list: two integer node labels per
/// line, extra tokens ignored. Lines starting with '#' or '%' are
/// comments; blank lines are skipped. Labels are relabeled to dense ids
/// in order of first appearance; duplicate edges, reversed duplicates
/// and self-loops are dropped. Throws ParseError on malformed tokens or
/// when the input contains no edges.
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});

LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                const LoadOptions& options = {});

}  // namespace fpcd
