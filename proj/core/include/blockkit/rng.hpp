#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace blockkit {

// splitmix64 finalizer; good avalanche, used for seed derivation and band
// bucket hashing.
inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Derives an independent substream seed from (seed, stream). Generation,
// hashing, and clustering each draw their randomness from their own stream so
// that per-record work can run in parallel without changing results.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t a = mix64(seed + 0x9E3779B97F4A7C15ULL);
    uint64_t b = mix64(stream + 0x632BE59BD9B4E019ULL);
    return mix64(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

// Deterministic random source. mt19937_64 has a fully specified algorithm, and
// all distributions below are hand-rolled, so sequences are identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    static Rng substream(uint64_t seed, uint64_t stream) {
        return Rng(derive_seed(seed, stream));
    }

    uint64_t next_u64() { return eng_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound). bound must be >= 1.
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    uint32_t below32(uint32_t bound) {
        return static_cast<uint32_t>(below(bound));
    }

    // Standard normal via Box-Muller.
    double normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace blockkit
