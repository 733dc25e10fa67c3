#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace blockkit {

inline int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn over [0, n) split into contiguous chunks, one per worker.
//
// Contract for callers: every chunk writes only to its own output slots, or
// produces an integer/set result merged afterwards in chunk order. Floating
// point reductions that must be bitwise stable across thread counts are done
// sequentially by the caller instead.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    if (threads <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    std::size_t workers = static_cast<std::size_t>(threads);
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace blockkit
