#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blockkit/corpus.hpp"
#include "blockkit/minhash.hpp"
#include "blockkit/partition.hpp"

namespace blockkit {

// Simple undirected graph over record ids 0..n-1 with CSR adjacency.
struct SimilarityGraph {
    uint32_t n = 0;
    EdgeList edges;                   // sorted, unique, a < b
    std::vector<uint32_t> offsets;    // size n + 1
    std::vector<uint32_t> neighbors;  // both directions, sorted per node

    static SimilarityGraph build(uint32_t n, EdgeList edges);

    std::span<const uint32_t> neighbors_of(uint32_t v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }
    uint32_t degree(uint32_t v) const { return offsets[v + 1] - offsets[v]; }
    uint64_t edge_count() const { return edges.size(); }
};

// One block per connected component; isolated nodes become singletons.
BlockingPartition connected_components(const SimilarityGraph& g);

// Modularity Q = sum_c (e_c/m - (d_c/2m)^2) of a community assignment over the
// subgraph induced by `nodes`. community_of_local[i] labels nodes[i].
double modularity(const SimilarityGraph& g, std::span<const uint32_t> nodes,
                  std::span<const uint32_t> community_of_local);

// Greedy agglomerative modularity maximization: start from singletons, merge
// the community pair with the largest gain until no merge increases Q. Ties
// break on the lowest (community_a, community_b). Gains compare exactly via
// the integer 2*m*E_uv - d_u*d_v, so results do not depend on float rounding.
// Returns communities as sorted global node id lists ordered by smallest
// member. A component with no edges falls apart into singletons.
std::vector<std::vector<uint32_t>> greedy_modularity_split(const SimilarityGraph& g,
                                                           std::span<const uint32_t> component);

struct StageSeconds {
    std::string stage;
    double seconds = 0;
};
using StageTimings = std::vector<StageSeconds>;

struct TlshParams {
    int shingle_k = 5;
    int permutations = 100;
    int bands = 26;
    uint32_t max_block = 500;
    uint64_t seed = 0;
    int threads = 1;
};

struct TlshResult {
    BlockingPartition partition;
    StageTimings timings;
    uint64_t edge_count = 0;
    std::size_t vocab_size = 0;
};

// shingle -> minhash -> band -> graph -> components, then repeatedly split any
// block larger than max_block into greedy modularity communities; a block the
// split cannot divide is force-split into ceil(size/max_block) chunks by
// descending degree. Every output block has size <= max_block.
TlshResult tlsh_block(const Dataset& ds, const TlshParams& params);

}  // namespace blockkit
