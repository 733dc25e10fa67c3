#include "blockkit/minhash.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "blockkit/errors.hpp"
#include "blockkit/parallel.hpp"
#include "blockkit/rng.hpp"

namespace blockkit {

namespace {

constexpr uint64_t kP = MinHashFamily::kPrime;

inline uint64_t mod_mersenne61(unsigned __int128 z) {
    // Two folds bring any 128-bit value under 2^62, then one conditional
    // subtract lands in [0, P).
    uint64_t lo = static_cast<uint64_t>(z & kP);
    uint64_t hi = static_cast<uint64_t>(z >> 61);
    unsigned __int128 s = static_cast<unsigned __int128>(lo) + hi;
    uint64_t r = static_cast<uint64_t>(s & kP) + static_cast<uint64_t>(s >> 61);
    if (r >= kP) r -= kP;
    return r;
}

}  // namespace

MinHashFamily MinHashFamily::create(int p, uint64_t seed) {
    if (p < 1) throw ParamError("permutation count must be >= 1, got " + std::to_string(p));
    MinHashFamily f;
    f.p = p;
    f.seed = seed;
    f.mul.resize(p);
    f.add.resize(p);
    Rng rng = Rng::substream(seed, 0x6d696e68);
    for (int i = 0; i < p; ++i) {
        f.mul[i] = 1 + rng.below(kP - 1);
        f.add[i] = rng.below(kP);
    }
    return f;
}

uint64_t MinHashFamily::hash(int i, uint64_t x) const {
    unsigned __int128 z = static_cast<unsigned __int128>(mul[i]) * x + add[i];
    return mod_mersenne61(z);
}

SignatureMatrix minhash_signatures(const IncidenceMatrix& m, const MinHashFamily& family,
                                   int threads) {
    SignatureMatrix sig;
    sig.p = family.p;
    sig.n = m.n();
    sig.values.assign(static_cast<std::size_t>(sig.p) * sig.n,
                      std::numeric_limits<uint64_t>::max());
    sig.empty_col.assign(sig.n, 0);

    parallel_chunks(sig.n, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t col = lo; col < hi; ++col) {
            const auto& tokens = m.columns[col];
            if (tokens.empty()) {
                sig.empty_col[col] = 1;
                continue;
            }
            uint64_t* out = &sig.values[col * static_cast<std::size_t>(sig.p)];
            for (int i = 0; i < sig.p; ++i) {
                uint64_t best = std::numeric_limits<uint64_t>::max();
                for (uint32_t w : tokens) {
                    uint64_t h = family.hash(i, w);
                    if (h < best) best = h;
                }
                out[i] = best;
            }
        }
    });
    return sig;
}

EdgeList band_and_bucket(const SignatureMatrix& sig, int b, int threads, BandStats* stats) {
    if (b < 1 || b > sig.p)
        throw ParamError("band count must be in [1, " + std::to_string(sig.p) + "], got " +
                         std::to_string(b));

    int rows = sig.p / b;
    // Band i covers [i*rows, (i+1)*rows); the remainder rows go to the last band.
    std::vector<std::vector<uint64_t>> band_keys(b);
    std::vector<BandStats> band_stats(b);

    parallel_chunks(static_cast<std::size_t>(b), std::min(threads, b),
                    [&](std::size_t blo, std::size_t bhi) {
        for (std::size_t band = blo; band < bhi; ++band) {
            int row_lo = static_cast<int>(band) * rows;
            int row_hi = band + 1 == static_cast<std::size_t>(b) ? sig.p : row_lo + rows;
            std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
            buckets.reserve(sig.n);
            for (uint32_t col = 0; col < sig.n; ++col) {
                if (sig.empty_col[col]) continue;
                const uint64_t* v = &sig.values[static_cast<std::size_t>(col) * sig.p];
                uint64_t h = mix64(band + 0x62616e64ULL);
                for (int r = row_lo; r < row_hi; ++r) h = mix64(h ^ v[r]);
                buckets[h].push_back(col);
            }
            auto& keys = band_keys[band];
            for (auto& [h, members] : buckets) {
                if (members.size() < 2) continue;
                ++band_stats[band].occupied_buckets;
                band_stats[band].emitted_pairs +=
                    static_cast<uint64_t>(members.size()) * (members.size() - 1) / 2;
                for (std::size_t i = 0; i < members.size(); ++i)
                    for (std::size_t j = i + 1; j < members.size(); ++j)
                        keys.push_back(pair_key(members[i], members[j]));
            }
        }
    });

    std::unordered_set<uint64_t> seen;
    std::size_t total = 0;
    for (const auto& keys : band_keys) total += keys.size();
    seen.reserve(total);
    for (const auto& keys : band_keys)
        for (uint64_t k : keys) seen.insert(k);

    EdgeList edges;
    edges.reserve(seen.size());
    for (uint64_t k : seen)
        edges.emplace_back(static_cast<uint32_t>(k >> 32), static_cast<uint32_t>(k));
    std::sort(edges.begin(), edges.end());

    if (stats) {
        BandStats agg;
        for (const auto& s : band_stats) {
            agg.emitted_pairs += s.emitted_pairs;
            agg.occupied_buckets += s.occupied_buckets;
        }
        *stats = agg;
    }
    return edges;
}

}  // namespace blockkit
