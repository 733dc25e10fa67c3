#include "blockkit/tlsh.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

#include "blockkit/errors.hpp"

namespace blockkit {

SimilarityGraph SimilarityGraph::build(uint32_t n, EdgeList edges) {
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());

    SimilarityGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : g.edges) {
        ++g.offsets[a + 1];
        ++g.offsets[b + 1];
    }
    for (uint32_t v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors.resize(g.offsets[n]);
    std::vector<uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [a, b] : g.edges) {
        g.neighbors[cursor[a]++] = b;
        g.neighbors[cursor[b]++] = a;
    }
    for (uint32_t v = 0; v < n; ++v)
        std::sort(g.neighbors.begin() + g.offsets[v], g.neighbors.begin() + g.offsets[v + 1]);
    return g;
}

BlockingPartition connected_components(const SimilarityGraph& g) {
    constexpr uint32_t kUnset = 0xffffffffu;
    std::vector<uint32_t> label(g.n, kUnset);
    std::vector<uint32_t> stack;
    uint32_t next = 0;
    for (uint32_t v = 0; v < g.n; ++v) {
        if (label[v] != kUnset) continue;
        uint32_t comp = next++;
        label[v] = comp;
        stack.push_back(v);
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            for (uint32_t w : g.neighbors_of(u)) {
                if (label[w] == kUnset) {
                    label[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    BlockingPartition p;
    p.assignment = std::move(label);
    p.num_blocks = next;
    return p;
}

double modularity(const SimilarityGraph& g, std::span<const uint32_t> nodes,
                  std::span<const uint32_t> community_of_local) {
    std::unordered_map<uint32_t, uint32_t> local;
    local.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) local.emplace(nodes[i], static_cast<uint32_t>(i));

    uint32_t ncomm = 0;
    for (uint32_t c : community_of_local) ncomm = std::max(ncomm, c + 1);
    std::vector<uint64_t> intra(ncomm, 0), deg(ncomm, 0);
    uint64_t m = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (uint32_t w : g.neighbors_of(nodes[i])) {
            auto it = local.find(w);
            if (it == local.end()) continue;
            uint32_t j = it->second;
            if (nodes[i] < w) {
                ++m;
                if (community_of_local[i] == community_of_local[j])
                    ++intra[community_of_local[i]];
            }
            ++deg[community_of_local[i]];
        }
    }
    if (m == 0) return 0.0;
    double q = 0.0;
    double two_m = 2.0 * static_cast<double>(m);
    for (uint32_t c = 0; c < ncomm; ++c) {
        double a = static_cast<double>(deg[c]) / two_m;
        q += static_cast<double>(intra[c]) / static_cast<double>(m) - a * a;
    }
    return q;
}

namespace {

struct MergeCandidate {
    int64_t gain = 0;  // 2*m*E_uv - d_u*d_v; positive iff the merge raises Q
    uint32_t u = 0;
    uint32_t v = 0;
    uint32_t e = 0;
};

struct CandidateOrder {
    // priority_queue pops the *largest*; treat higher gain, then lower (u, v)
    // as larger.
    bool operator()(const MergeCandidate& a, const MergeCandidate& b) const {
        if (a.gain != b.gain) return a.gain < b.gain;
        if (a.u != b.u) return a.u > b.u;
        return a.v > b.v;
    }
};

}  // namespace

std::vector<std::vector<uint32_t>> greedy_modularity_split(const SimilarityGraph& g,
                                                           std::span<const uint32_t> component) {
    std::size_t s = component.size();
    std::vector<std::vector<uint32_t>> out;
    if (s == 0) return out;
    if (s == 1) {
        out.push_back({component[0]});
        return out;
    }

    std::unordered_map<uint32_t, uint32_t> local;
    local.reserve(s);
    for (std::size_t i = 0; i < s; ++i) local.emplace(component[i], static_cast<uint32_t>(i));

    // Induced edges and degrees.
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (std::size_t i = 0; i < s; ++i) {
        for (uint32_t w : g.neighbors_of(component[i])) {
            auto it = local.find(w);
            if (it == local.end() || component[i] >= w) continue;
            edges.emplace_back(static_cast<uint32_t>(i), it->second);
        }
    }
    int64_t m = static_cast<int64_t>(edges.size());

    std::vector<int64_t> deg(s, 0);
    std::vector<std::unordered_map<uint32_t, uint32_t>> between(s);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
        ++between[a][b];
        ++between[b][a];
    }

    std::vector<uint8_t> alive(s, 1);
    std::vector<std::vector<uint32_t>> members(s);
    for (std::size_t i = 0; i < s; ++i) members[i] = {static_cast<uint32_t>(i)};

    auto gain_of = [&](uint32_t u, uint32_t v, uint32_t e) {
        return 2 * m * static_cast<int64_t>(e) - deg[u] * deg[v];
    };

    std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateOrder> heap;
    std::size_t live_pairs = 0;
    for (uint32_t u = 0; u < s; ++u) {
        for (const auto& [v, e] : between[u]) {
            if (u < v) {
                heap.push({gain_of(u, v, e), u, v, e});
                ++live_pairs;
            }
        }
    }

    auto rebuild_heap = [&] {
        std::vector<MergeCandidate> fresh;
        fresh.reserve(live_pairs);
        for (uint32_t u = 0; u < s; ++u) {
            if (!alive[u]) continue;
            for (const auto& [v, e] : between[u]) {
                if (u < v) fresh.push_back({gain_of(u, v, e), u, v, e});
            }
        }
        heap = std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateOrder>(
            CandidateOrder{}, std::move(fresh));
    };

    while (!heap.empty()) {
        MergeCandidate top = heap.top();
        heap.pop();
        if (!alive[top.u] || !alive[top.v]) continue;
        auto it = between[top.u].find(top.v);
        if (it == between[top.u].end() || it->second != top.e) continue;
        if (gain_of(top.u, top.v, top.e) != top.gain) continue;  // degree changed since push
        if (top.gain <= 0) break;

        uint32_t u = top.u, v = top.v;
        // Fold v into u. Neighbors of v are re-pointed at u; every surviving
        // pair touching u gets a refreshed heap entry since d_u changed.
        alive[v] = 0;
        deg[u] += deg[v];
        between[u].erase(v);
        between[v].erase(u);
        --live_pairs;
        for (const auto& [w, e] : between[v]) {
            between[w].erase(v);
            auto [slot, fresh] = between[u].try_emplace(w, 0);
            slot->second += e;
            between[w][u] = slot->second;
            if (!fresh) --live_pairs;  // (v,w) collapsed into an existing (u,w)
        }
        between[v].clear();
        members[u].insert(members[u].end(), members[v].begin(), members[v].end());
        members[v].clear();
        members[v].shrink_to_fit();

        for (const auto& [w, e] : between[u]) {
            uint32_t a = std::min(u, w), b = std::max(u, w);
            heap.push({gain_of(a, b, e), a, b, e});
        }
        if (heap.size() > std::max<std::size_t>(4 * live_pairs, 65536)) rebuild_heap();
    }

    for (uint32_t u = 0; u < s; ++u) {
        if (!alive[u]) continue;
        std::vector<uint32_t> global_ids;
        global_ids.reserve(members[u].size());
        for (uint32_t i : members[u]) global_ids.push_back(component[i]);
        std::sort(global_ids.begin(), global_ids.end());
        out.push_back(std::move(global_ids));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::vector<uint32_t>> force_split(const SimilarityGraph& g,
                                               std::vector<uint32_t> block, uint32_t t) {
    std::sort(block.begin(), block.end(), [&](uint32_t a, uint32_t b) {
        uint32_t da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::size_t chunks = (block.size() + t - 1) / t;
    std::size_t base = block.size() / chunks;
    std::size_t extra = block.size() % chunks;
    std::vector<std::vector<uint32_t>> out;
    out.reserve(chunks);
    std::size_t pos = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        out.emplace_back(block.begin() + pos, block.begin() + pos + len);
        pos += len;
    }
    return out;
}

}  // namespace

TlshResult tlsh_block(const Dataset& ds, const TlshParams& params) {
    if (params.max_block < 1) throw ParamError("max block size must be >= 1");
    using clock = std::chrono::steady_clock;
    TlshResult result;
    auto t_start = clock::now();

    auto t0 = clock::now();
    TokenizedDataset td = tokenize_dataset(ds, params.shingle_k, params.threads);
    IncidenceMatrix inc = incidence_matrix(td);
    result.vocab_size = td.vocab.size();
    result.timings.push_back({"shingle", seconds_since(t0)});

    t0 = clock::now();
    MinHashFamily family = MinHashFamily::create(params.permutations, params.seed);
    SignatureMatrix sig = minhash_signatures(inc, family, params.threads);
    result.timings.push_back({"hash", seconds_since(t0)});

    t0 = clock::now();
    EdgeList edges = band_and_bucket(sig, params.bands, params.threads);
    SimilarityGraph graph = SimilarityGraph::build(ds.n(), std::move(edges));
    result.edge_count = graph.edge_count();
    BlockingPartition components = connected_components(graph);
    result.timings.push_back({"graph", seconds_since(t0)});

    t0 = clock::now();
    std::vector<uint32_t> labels(ds.n(), 0);
    uint32_t next_label = 0;
    std::vector<std::vector<uint32_t>> work = components.blocks();
    while (!work.empty()) {
        std::vector<uint32_t> block = std::move(work.back());
        work.pop_back();
        if (block.size() <= params.max_block) {
            uint32_t label = next_label++;
            for (uint32_t v : block) labels[v] = label;
            continue;
        }
        auto communities = greedy_modularity_split(graph, block);
        if (communities.size() <= 1) {
            for (auto& chunk : force_split(graph, std::move(block), params.max_block)) {
                uint32_t label = next_label++;
                for (uint32_t v : chunk) labels[v] = label;
            }
            continue;
        }
        for (auto& community : communities) work.push_back(std::move(community));
    }
    result.partition = BlockingPartition::from_labels(labels);
    result.timings.push_back({"split", seconds_since(t0)});
    result.timings.push_back({"total", seconds_since(t_start)});
    return result;
}

}  // namespace blockkit
