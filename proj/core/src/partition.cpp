#include "blockkit/partition.hpp"

#include <limits>

namespace blockkit {

BlockingPartition BlockingPartition::from_labels(const std::vector<uint32_t>& labels) {
    constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
    uint32_t max_label = 0;
    for (uint32_t l : labels) max_label = std::max(max_label, l);
    std::vector<uint32_t> remap(static_cast<std::size_t>(max_label) + 1, kUnset);
    BlockingPartition p;
    p.assignment.resize(labels.size());
    uint32_t next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        uint32_t& slot = remap[labels[i]];
        if (slot == kUnset) slot = next++;
        p.assignment[i] = slot;
    }
    p.num_blocks = next;
    return p;
}

std::vector<std::vector<uint32_t>> BlockingPartition::blocks() const {
    std::vector<std::vector<uint32_t>> out(num_blocks);
    for (uint32_t i = 0; i < assignment.size(); ++i) out[assignment[i]].push_back(i);
    return out;
}

std::vector<uint32_t> BlockingPartition::block_sizes() const {
    std::vector<uint32_t> sizes(num_blocks, 0);
    for (uint32_t b : assignment) ++sizes[b];
    return sizes;
}

uint64_t BlockingPartition::candidate_pair_count() const {
    uint64_t total = 0;
    for (uint32_t s : block_sizes()) total += total_pair_count(s);
    return total;
}

bool BlockingPartition::is_valid() const {
    std::vector<uint32_t> sizes(num_blocks, 0);
    for (uint32_t b : assignment) {
        if (b >= num_blocks) return false;
        ++sizes[b];
    }
    for (uint32_t s : sizes) {
        if (s == 0) return false;
    }
    return true;
}

}  // namespace blockkit
