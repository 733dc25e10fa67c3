// Independent reference implementations used to check the library. Everything
// here is deliberately brute force and shares no code with the paths under
// test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blockkit/blockkit.hpp"

namespace oracle {

// Full-matrix Levenshtein.
inline uint32_t levenshtein_matrix(std::string_view a, std::string_view b) {
    std::vector<std::vector<uint32_t>> d(a.size() + 1,
                                         std::vector<uint32_t>(b.size() + 1, 0));
    for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<uint32_t>(i);
    for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<uint32_t>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            uint32_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u);
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
        }
    }
    return d[a.size()][b.size()];
}

// Unrestricted Damerau-Levenshtein (Lowrance-Wagner): substitution, insertion,
// deletion, and transposition each cost 1, and the triangle inequality holds.
inline uint32_t damerau_levenshtein(std::string_view a, std::string_view b) {
    const std::size_t la = a.size(), lb = b.size();
    const uint32_t inf = static_cast<uint32_t>(la + lb + 2);
    std::vector<std::vector<uint32_t>> d(la + 2, std::vector<uint32_t>(lb + 2, inf));
    d[0][0] = inf;
    for (std::size_t i = 0; i <= la; ++i) {
        d[i + 1][1] = static_cast<uint32_t>(i);
        d[i + 1][0] = inf;
    }
    for (std::size_t j = 0; j <= lb; ++j) {
        d[1][j + 1] = static_cast<uint32_t>(j);
        d[0][j + 1] = inf;
    }
    std::vector<std::size_t> last_row(256, 0);
    for (std::size_t i = 1; i <= la; ++i) {
        std::size_t last_col = 0;
        for (std::size_t j = 1; j <= lb; ++j) {
            std::size_t i1 = last_row[static_cast<unsigned char>(b[j - 1])];
            std::size_t j1 = last_col;
            uint32_t cost = a[i - 1] == b[j - 1] ? 0u : 1u;
            if (cost == 0) last_col = j;
            d[i + 1][j + 1] = std::min(
                {d[i][j] + cost, d[i + 1][j] + 1, d[i][j + 1] + 1,
                 d[i1][j1] + static_cast<uint32_t>(i - i1 - 1) + 1 +
                     static_cast<uint32_t>(j - j1 - 1)});
        }
        last_row[static_cast<unsigned char>(a[i - 1])] = i;
    }
    return d[la + 1][lb + 1];
}

// Jaccard over explicit std::set supports.
inline double jaccard_sets(const blockkit::ShingleBag& a, const blockkit::ShingleBag& b) {
    std::set<std::string> sa, sb, un, in;
    for (const auto& [t, c] : a.counts) sa.insert(t);
    for (const auto& [t, c] : b.counts) sb.insert(t);
    if (sa.empty() && sb.empty()) return 0.0;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(un, un.end()));
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(in, in.end()));
    return static_cast<double>(in.size()) / static_cast<double>(un.size());
}

// Brute-force banding: an edge iff some band's sub-signature rows all agree.
inline std::set<std::pair<uint32_t, uint32_t>> band_edges_bruteforce(
    const blockkit::SignatureMatrix& sig, int b) {
    int rows = sig.p / b;
    std::set<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < sig.n; ++i) {
        if (sig.empty_col[i]) continue;
        for (uint32_t j = i + 1; j < sig.n; ++j) {
            if (sig.empty_col[j]) continue;
            for (int band = 0; band < b; ++band) {
                int lo = band * rows;
                int hi = band + 1 == b ? sig.p : lo + rows;
                bool all = true;
                for (int r = lo; r < hi; ++r) {
                    if (sig.at(r, i) != sig.at(r, j)) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    edges.emplace(i, j);
                    break;
                }
            }
        }
    }
    return edges;
}

// Reachability components by repeated relaxation.
inline std::vector<uint32_t> components_bruteforce(uint32_t n,
                                                   const blockkit::EdgeList& edges) {
    std::vector<uint32_t> label(n);
    for (uint32_t i = 0; i < n; ++i) label[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : edges) {
            uint32_t m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
                label[a] = label[b] = m;
                changed = true;
            }
        }
    }
    return label;
}

// Enumerates every partition of {0..n-1} via restricted growth strings.
inline void enumerate_partitions(uint32_t n,
                                 const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> rgs(n, 0);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t i, uint32_t max_used) {
        if (i == n) {
            fn(rgs);
            return;
        }
        for (uint32_t c = 0; c <= max_used + 1 && c < n; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(max_used, c));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
}

// Modularity of a labeled partition of the whole node set of `edges`.
inline double modularity_direct([[maybe_unused]] uint32_t n, const blockkit::EdgeList& edges,
                                const std::vector<uint32_t>& community) {
    double m = static_cast<double>(edges.size());
    if (m == 0) return 0.0;
    uint32_t c = *std::max_element(community.begin(), community.end()) + 1;
    std::vector<double> intra(c, 0.0), deg(c, 0.0);
    for (const auto& [a, b] : edges) {
        if (community[a] == community[b]) intra[community[a]] += 1.0;
        deg[community[a]] += 1.0;
        deg[community[b]] += 1.0;
    }
    double q = 0.0;
    for (uint32_t k = 0; k < c; ++k) {
        double a = deg[k] / (2.0 * m);
        q += intra[k] / m - a * a;
    }
    return q;
}

// Exhaustive best-modularity partition; practical up to ~12 nodes.
inline double best_modularity(uint32_t n, const blockkit::EdgeList& edges,
                              std::vector<uint32_t>* best_partition = nullptr) {
    double best = -2.0;
    enumerate_partitions(n, [&](const std::vector<uint32_t>& part) {
        double q = modularity_direct(n, edges, part);
        if (q > best) {
            best = q;
            if (best_partition) *best_partition = part;
        }
    });
    return best;
}

// Exhaustive best 2-partition (including the trivial one-side-empty split).
inline double best_two_partition(uint32_t n, const blockkit::EdgeList& edges,
                                 std::vector<uint32_t>* best_partition = nullptr) {
    double best = -2.0;
    std::vector<uint32_t> part(n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
        for (uint32_t i = 0; i < n; ++i) part[i] = (mask >> i) & 1;
        double q = modularity_direct(n, edges, part);
        if (q > best) {
            best = q;
            if (best_partition) *best_partition = part;
        }
    }
    return best;
}

// Recall / reduction ratio by checking every pair against every block.
struct BruteScore {
    uint64_t candidate = 0;
    uint64_t preserved = 0;
    double recall_pct = 100.0;
    double rr_pct = 0.0;
};

inline BruteScore score_bruteforce(const blockkit::BlockingPartition& p,
                                   const std::vector<blockkit::RecordPair>& truth) {
    BruteScore s;
    uint32_t n = p.n();
    std::set<std::pair<uint32_t, uint32_t>> truth_set(truth.begin(), truth.end());
    uint64_t all = 0;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            ++all;
            if (p.assignment[i] == p.assignment[j]) {
                ++s.candidate;
                if (truth_set.count({i, j})) ++s.preserved;
            }
        }
    }
    s.recall_pct = truth.empty()
                       ? 100.0
                       : 100.0 * static_cast<double>(s.preserved) / truth.size();
    s.rr_pct = all == 0 ? 100.0 : 100.0 * (1.0 - static_cast<double>(s.candidate) / all);
    return s;
}

// Same evaluation against an arbitrary pair membership predicate.
inline BruteScore score_pairs_bruteforce(
    uint32_t n, const std::function<bool(uint32_t, uint32_t)>& member,
    const std::vector<blockkit::RecordPair>& truth) {
    BruteScore s;
    std::set<std::pair<uint32_t, uint32_t>> truth_set(truth.begin(), truth.end());
    uint64_t all = 0;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            ++all;
            if (member(i, j)) {
                ++s.candidate;
                if (truth_set.count({i, j})) ++s.preserved;
            }
        }
    }
    s.recall_pct = truth.empty()
                       ? 100.0
                       : 100.0 * static_cast<double>(s.preserved) / truth.size();
    s.rr_pct = all == 0 ? 100.0 : 100.0 * (1.0 - static_cast<double>(s.candidate) / all);
    return s;
}

}  // namespace oracle
