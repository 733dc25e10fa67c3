#pragma once

#include <cstdint>
#include <vector>

#include "blockkit/corpus.hpp"

namespace blockkit {

// Assignment of every record to exactly one block, block ids contiguous from 0
// in order of first appearance by record id.
struct BlockingPartition {
    std::vector<uint32_t> assignment;
    uint32_t num_blocks = 0;

    uint32_t n() const { return static_cast<uint32_t>(assignment.size()); }

    // Relabels arbitrary labels to the canonical contiguous form.
    static BlockingPartition from_labels(const std::vector<uint32_t>& labels);

    std::vector<std::vector<uint32_t>> blocks() const;
    std::vector<uint32_t> block_sizes() const;
    uint64_t candidate_pair_count() const;
    bool is_valid() const;
};

inline uint64_t total_pair_count(uint64_t n) { return n * (n - 1) / 2; }

}  // namespace blockkit
