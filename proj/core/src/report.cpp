#include "fpcd/report.hpp"

#include <map>

namespace fpcd {

std::vector<std::pair<std::int64_t, std::int64_t>> module_size_histogram(const Partition& p) {
    std::map<std::int64_t, std::int64_t> hist;
    for (CommunityId c : p.live_communities()) ++hist[p.size(c)];
    return {hist.begin(), hist.end()};
}

}  // namespace fpcd
