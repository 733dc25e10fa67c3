#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockkit/corpus.hpp"
#include "blockkit/partition.hpp"
#include "blockkit/shingle.hpp"
#include "blockkit/tlsh.hpp"  // StageTimings

namespace blockkit {

// p random unit vectors over the vocabulary, i.i.d. standard normal entries
// scaled to Euclidean norm 1. Stored token-major (dim rows of p entries) so a
// projection visits all p coordinates of one token contiguously.
struct RandomUnitVectors {
    int p = 0;
    std::size_t dim = 0;
    std::vector<double> data;  // data[token * p + m]

    double at(std::size_t token, int m) const { return data[token * p + m]; }
};

RandomUnitVectors random_unit_vectors(std::size_t dim, int p, uint64_t seed);

// Dense n x p projections r_{j,m} = sum_w u_{m,w} * count_{j,w} * idf_w.
struct ProjectedMatrix {
    uint32_t n = 0;
    int p = 0;
    std::vector<double> data;  // row-major

    std::span<const double> row(uint32_t j) const {
        return {data.data() + static_cast<std::size_t>(j) * p, static_cast<std::size_t>(p)};
    }
};

ProjectedMatrix project(const TokenizedDataset& td, const RandomUnitVectors& units,
                        int threads = 1);

struct KMeansResult {
    std::vector<uint32_t> assignment;
    std::vector<double> centers;  // c x p row-major
    uint32_t c = 0;
    int p = 0;
    int iterations_run = 0;
    double inertia = 0.0;
    std::vector<double> inertia_history;  // one entry per assignment pass
};

// Lloyd iterations with k-means++ seeding; stops at an assignment fixpoint or
// max_iter. Empty clusters are refilled with the point farthest from its
// center. Assignment distances evaluate per point in a fixed order, so output
// is identical for any thread count. Throws ParamError unless 1 <= c <= n.
KMeansResult kmeans(const ProjectedMatrix& points, uint32_t c, int max_iter, uint64_t seed,
                    int threads = 1);

struct KlshParams {
    int shingle_k = 2;
    int projections = 100;
    uint32_t num_blocks = 0;      // c; used when > 0
    uint32_t avg_block_size = 0;  // otherwise c = ceil(n / avg_block_size)
    int max_iter = 100;
    uint64_t seed = 0;
    int threads = 1;
};

struct KlshResult {
    BlockingPartition partition;
    StageTimings timings;
    std::size_t vocab_size = 0;
    uint32_t clusters = 0;
    int kmeans_iterations = 0;
    double inertia = 0.0;
};

// shingle (with counts) -> vocabulary/idf -> project -> k-means; blocks are
// the nonempty clusters.
KlshResult klsh_block(const Dataset& ds, const KlshParams& params);

}  // namespace blockkit
