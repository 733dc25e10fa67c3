#pragma once

#include <cstdint>
#include <vector>

#include "blockkit/shingle.hpp"

namespace blockkit {

// Universal hash family h_i(x) = (a_i * x + b_i) mod P over token indices,
// P = 2^61 - 1. Each h_i stands in for one random row permutation.
struct MinHashFamily {
    static constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;

    int p = 0;
    uint64_t seed = 0;
    std::vector<uint64_t> mul;  // a_i, nonzero mod P
    std::vector<uint64_t> add;  // b_i

    static MinHashFamily create(int p, uint64_t seed);
    uint64_t hash(int i, uint64_t x) const;
};

// Dense p x n signature matrix M'. Column-major so a band of rows within one
// column is contiguous. Columns of records with no tokens are flagged empty
// and never participate in banding.
struct SignatureMatrix {
    int p = 0;
    uint32_t n = 0;
    std::vector<uint64_t> values;     // values[col * p + row]
    std::vector<uint8_t> empty_col;

    uint64_t at(int row, uint32_t col) const {
        return values[static_cast<std::size_t>(col) * p + row];
    }
};

// Per-column minimum of each hash function over the tokens present.
SignatureMatrix minhash_signatures(const IncidenceMatrix& m, const MinHashFamily& family,
                                   int threads = 1);

// Unordered candidate edges, sorted, deduplicated, no self loops.
using EdgeList = std::vector<std::pair<uint32_t, uint32_t>>;

struct BandStats {
    uint64_t emitted_pairs = 0;      // sum over buckets of C(|bucket|, 2)
    uint64_t occupied_buckets = 0;   // buckets with at least 2 members
};

// Splits the p rows into b contiguous bands of floor(p/b) rows (remainder rows
// appended to the last band). Each column's band sub-signature is hashed to a
// 64-bit bucket; all columns sharing a (band, bucket) produce pairwise edges,
// iterated per bucket rather than over all pairs. Throws ParamError unless
// 1 <= b <= p.
EdgeList band_and_bucket(const SignatureMatrix& sig, int b, int threads = 1,
                         BandStats* stats = nullptr);

}  // namespace blockkit
