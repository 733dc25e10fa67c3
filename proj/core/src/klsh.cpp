#include "blockkit/klsh.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>

#include "blockkit/errors.hpp"
#include "blockkit/parallel.hpp"
#include "blockkit/rng.hpp"

namespace blockkit {

RandomUnitVectors random_unit_vectors(std::size_t dim, int p, uint64_t seed) {
    if (dim < 1) throw ParamError("unit vector dimension must be >= 1");
    if (p < 1) throw ParamError("projection count must be >= 1");
    RandomUnitVectors u;
    u.p = p;
    u.dim = dim;
    u.data.resize(dim * static_cast<std::size_t>(p));
    for (int m = 0; m < p; ++m) {
        Rng rng = Rng::substream(seed, 0x756e6974ULL + static_cast<uint64_t>(m));
        double norm_sq = 0.0;
        for (std::size_t w = 0; w < dim; ++w) {
            double x = rng.normal();
            u.data[w * static_cast<std::size_t>(p) + m] = x;
            norm_sq += x * x;
        }
        double scale = norm_sq > 0.0 ? 1.0 / std::sqrt(norm_sq) : 0.0;
        if (scale == 0.0) {
            u.data[m] = 1.0;
            continue;
        }
        for (std::size_t w = 0; w < dim; ++w) u.data[w * static_cast<std::size_t>(p) + m] *= scale;
    }
    return u;
}

ProjectedMatrix project(const TokenizedDataset& td, const RandomUnitVectors& units,
                        int threads) {
    if (units.dim != td.vocab.size())
        throw ParamError("unit vectors built for a different vocabulary");
    ProjectedMatrix r;
    r.n = td.n();
    r.p = units.p;
    r.data.assign(static_cast<std::size_t>(r.n) * r.p, 0.0);
    const int p = r.p;
    parallel_chunks(r.n, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            double* row = &r.data[j * static_cast<std::size_t>(p)];
            const TokenCounts& tc = td.records[j];
            for (std::size_t t = 0; t < tc.tokens.size(); ++t) {
                double weight = td.vocab.idf[tc.tokens[t]] * tc.counts[t];
                if (weight == 0.0) continue;
                const double* u = &units.data[static_cast<std::size_t>(tc.tokens[t]) * p];
                for (int m = 0; m < p; ++m) row[m] += weight * u[m];
            }
        }
    });
    return r;
}

namespace {

double dist_sq(const double* a, const double* b, int p) {
    double s = 0.0;
    for (int m = 0; m < p; ++m) {
        double d = a[m] - b[m];
        s += d * d;
    }
    return s;
}

}  // namespace

KMeansResult kmeans(const ProjectedMatrix& points, uint32_t c, int max_iter, uint64_t seed,
                    int threads) {
    const uint32_t n = points.n;
    const int p = points.p;
    if (c < 1) throw ParamError("cluster count must be >= 1");
    if (c > n)
        throw ParamError("cluster count " + std::to_string(c) + " exceeds point count " +
                         std::to_string(n));

    KMeansResult res;
    res.c = c;
    res.p = p;
    res.centers.assign(static_cast<std::size_t>(c) * p, 0.0);
    res.assignment.assign(n, 0);

    // k-means++ seeding.
    Rng rng = Rng::substream(seed, 0x6b6d6570ULL);
    std::vector<double> d2(n, std::numeric_limits<double>::max());
    std::vector<uint8_t> is_center(n, 0);
    auto add_center = [&](uint32_t k, uint32_t idx) {
        std::copy_n(points.row(idx).data(), p, &res.centers[static_cast<std::size_t>(k) * p]);
        is_center[idx] = 1;
        parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
            const double* center = &res.centers[static_cast<std::size_t>(k) * p];
            for (std::size_t j = lo; j < hi; ++j) {
                double d = dist_sq(points.row(static_cast<uint32_t>(j)).data(), center, p);
                if (d < d2[j]) d2[j] = d;
            }
        });
    };
    add_center(0, static_cast<uint32_t>(rng.below(n)));
    for (uint32_t k = 1; k < c; ++k) {
        double total = 0.0;
        for (uint32_t j = 0; j < n; ++j) total += d2[j];
        uint32_t pick = n;
        if (total > 0.0) {
            double target = rng.next_double() * total;
            double acc = 0.0;
            for (uint32_t j = 0; j < n; ++j) {
                acc += d2[j];
                if (acc > target) {
                    pick = j;
                    break;
                }
            }
        }
        if (pick == n || is_center[pick]) {
            // Degenerate mass (duplicate points); take the lowest non-center.
            for (uint32_t j = 0; j < n; ++j) {
                if (!is_center[j]) {
                    pick = j;
                    break;
                }
            }
        }
        add_center(k, pick);
    }

    std::vector<double> best_d2(n, 0.0);
    std::vector<uint64_t> counts(c, 0);
    for (int pass = 0; pass < max_iter; ++pass) {
        // Assignment: independent per point, ties to the lowest cluster id.
        std::atomic<uint64_t> changed{0};
        parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
            uint64_t local_changed = 0;
            for (std::size_t j = lo; j < hi; ++j) {
                const double* x = points.row(static_cast<uint32_t>(j)).data();
                uint32_t best = 0;
                double best_d = dist_sq(x, &res.centers[0], p);
                for (uint32_t k = 1; k < c; ++k) {
                    double d = dist_sq(x, &res.centers[static_cast<std::size_t>(k) * p], p);
                    if (d < best_d) {
                        best_d = d;
                        best = k;
                    }
                }
                best_d2[j] = best_d;
                if (res.assignment[j] != best) {
                    res.assignment[j] = best;
                    ++local_changed;
                }
            }
            changed.fetch_add(local_changed, std::memory_order_relaxed);
        });

        // Fixed summation order keeps the value identical across thread counts.
        double inertia = 0.0;
        for (uint32_t j = 0; j < n; ++j) inertia += best_d2[j];
        res.inertia_history.push_back(inertia);
        if (changed.load() == 0 && pass > 0) {
            break;
        }

        // Update: means accumulated in record order.
        std::fill(res.centers.begin(), res.centers.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t j = 0; j < n; ++j) {
            const double* x = points.row(j).data();
            double* ctr = &res.centers[static_cast<std::size_t>(res.assignment[j]) * p];
            for (int m = 0; m < p; ++m) ctr[m] += x[m];
            ++counts[res.assignment[j]];
        }

        // Refill empty clusters with the farthest point of a multi-point
        // cluster before dividing.
        bool refilled = false;
        for (uint32_t k = 0; k < c; ++k) {
            if (counts[k] != 0) continue;
            uint32_t far = n;
            double far_d = -1.0;
            for (uint32_t j = 0; j < n; ++j) {
                if (counts[res.assignment[j]] < 2) continue;
                if (best_d2[j] > far_d) {
                    far_d = best_d2[j];
                    far = j;
                }
            }
            if (far == n) continue;  // cannot refill (c <= n makes this unreachable)
            --counts[res.assignment[far]];
            const double* x = points.row(far).data();
            double* old_ctr = &res.centers[static_cast<std::size_t>(res.assignment[far]) * p];
            for (int m = 0; m < p; ++m) old_ctr[m] -= x[m];
            res.assignment[far] = k;
            counts[k] = 1;
            best_d2[far] = 0.0;
            double* ctr = &res.centers[static_cast<std::size_t>(k) * p];
            for (int m = 0; m < p; ++m) ctr[m] = x[m];
            refilled = true;
        }
        (void)refilled;

        for (uint32_t k = 0; k < c; ++k) {
            if (counts[k] == 0) continue;
            double inv = 1.0 / static_cast<double>(counts[k]);
            double* ctr = &res.centers[static_cast<std::size_t>(k) * p];
            for (int m = 0; m < p; ++m) ctr[m] *= inv;
        }
    }

    res.iterations_run = static_cast<int>(res.inertia_history.size());
    double inertia = 0.0;
    for (uint32_t j = 0; j < n; ++j) {
        inertia += dist_sq(points.row(j).data(),
                           &res.centers[static_cast<std::size_t>(res.assignment[j]) * p], p);
    }
    res.inertia = inertia;
    return res;
}

KlshResult klsh_block(const Dataset& ds, const KlshParams& params) {
    using clock = std::chrono::steady_clock;
    auto since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    uint32_t c = params.num_blocks;
    if (c == 0) {
        if (params.avg_block_size == 0)
            throw ParamError("either a block count or an average block size is required");
        c = (ds.n() + params.avg_block_size - 1) / params.avg_block_size;
    }
    if (c < 1 || c > ds.n())
        throw ParamError("block count " + std::to_string(c) + " must be in [1, " +
                         std::to_string(ds.n()) + "]");

    KlshResult res;
    res.clusters = c;
    auto t_start = clock::now();

    auto t0 = clock::now();
    TokenizedDataset td = tokenize_dataset(ds, params.shingle_k, params.threads);
    res.vocab_size = td.vocab.size();
    res.timings.push_back({"shingle", since(t0)});

    t0 = clock::now();
    RandomUnitVectors units =
        random_unit_vectors(std::max<std::size_t>(td.vocab.size(), 1), params.projections,
                            derive_seed(params.seed, 0x70726f6aULL));
    ProjectedMatrix r = project(td, units, params.threads);
    res.timings.push_back({"project", since(t0)});

    t0 = clock::now();
    KMeansResult km = kmeans(r, c, params.max_iter, derive_seed(params.seed, 0x636c7573ULL),
                             params.threads);
    res.kmeans_iterations = km.iterations_run;
    res.inertia = km.inertia;
    res.partition = BlockingPartition::from_labels(km.assignment);
    res.timings.push_back({"cluster", since(t0)});
    res.timings.push_back({"total", since(t_start)});
    return res;
}

}  // namespace blockkit
