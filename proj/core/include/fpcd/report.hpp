#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpcd/partition.hpp"
#include "fpcd/quality.hpp"

namespace fpcd {

/// (module size, number of modules of that size), ascending by size.
std::vector<std::pair<std::int64_t, std::int64_t>> module_size_histogram(const Partition& p);

/// Everything a caller needs to describe one run; serialization lives
/// with the CLI, not here.
struct RunReport {
    std::string dataset;
    std::string algorithm;
    std::int64_t threshold = 0;  // meaningful for the seed-based algorithm only
    std::string sweep_order;     // meaningful for the greedy algorithm only
    std::uint64_t seed = 0;
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    FpScore fp_score{};
    double modularity_score = 0.0;
    std::int64_t modules = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> size_histogram;
    double wall_ms = 0.0;
};

}  // namespace fpcd
