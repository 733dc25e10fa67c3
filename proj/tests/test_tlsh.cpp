#include <numeric>
#include <set>

#include "blockkit/blockkit.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blockkit;

namespace {

EdgeList clique_edges(uint32_t lo, uint32_t hi) {
    EdgeList e;
    for (uint32_t i = lo; i < hi; ++i)
        for (uint32_t j = i + 1; j < hi; ++j) e.emplace_back(i, j);
    return e;
}

std::vector<uint32_t> all_nodes(uint32_t n) {
    std::vector<uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::set<std::set<uint32_t>> as_family(const std::vector<std::vector<uint32_t>>& comms) {
    std::set<std::set<uint32_t>> fam;
    for (const auto& c : comms) fam.emplace(c.begin(), c.end());
    return fam;
}

EdgeList random_connected_graph(uint32_t n, double extra_edge_prob, Rng& rng) {
    EdgeList edges;
    for (uint32_t v = 1; v < n; ++v) edges.emplace_back(static_cast<uint32_t>(rng.below(v)), v);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (rng.next_double() < extra_edge_prob) edges.emplace_back(i, j);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("connected components") {
    SUBCASE("no edges, all singletons") {
        auto g = SimilarityGraph::build(5, {});
        auto p = connected_components(g);
        CHECK(p.num_blocks == 5);
        CHECK(p.candidate_pair_count() == 0);
    }
    SUBCASE("path graph is one block") {
        auto g = SimilarityGraph::build(3, {{0, 1}, {1, 2}});
        auto p = connected_components(g);
        CHECK(p.num_blocks == 1);
    }
    SUBCASE("two cliques, no bridge") {
        EdgeList e = clique_edges(0, 4);
        auto more = clique_edges(4, 9);
        e.insert(e.end(), more.begin(), more.end());
        auto g = SimilarityGraph::build(9, e);
        auto p = connected_components(g);
        CHECK(p.num_blocks == 2);
        // Agreement with brute-force reachability.
        auto brute = oracle::components_bruteforce(9, g.edges);
        for (uint32_t i = 0; i < 9; ++i)
            for (uint32_t j = 0; j < 9; ++j)
                CHECK((p.assignment[i] == p.assignment[j]) == (brute[i] == brute[j]));
    }
    SUBCASE("matches brute force on random graphs") {
        Rng rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            uint32_t n = 2 + rng.below32(40);
            EdgeList edges;
            for (int e = 0; e < 25; ++e) {
                uint32_t a = rng.below32(n), b = rng.below32(n);
                if (a != b) edges.push_back(make_record_pair(a, b));
            }
            auto g = SimilarityGraph::build(n, edges);
            auto p = connected_components(g);
            auto brute = oracle::components_bruteforce(n, g.edges);
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j)
                    CHECK((p.assignment[i] == p.assignment[j]) == (brute[i] == brute[j]));
        }
    }
}

TEST_CASE("greedy split separates two 10-cliques joined by one bridge") {
    EdgeList e = clique_edges(0, 10);
    auto more = clique_edges(10, 20);
    e.insert(e.end(), more.begin(), more.end());
    e.emplace_back(0, 10);
    auto g = SimilarityGraph::build(20, e);

    auto comms = greedy_modularity_split(g, all_nodes(20));
    std::set<std::set<uint32_t>> expected = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
                                             {10, 11, 12, 13, 14, 15, 16, 17, 18, 19}};
    CHECK(as_family(comms) == expected);

    // The clique split is also the exhaustive best 2-partition.
    std::vector<uint32_t> best;
    oracle::best_two_partition(20, g.edges, &best);
    std::set<uint32_t> side;
    for (uint32_t i = 0; i < 20; ++i)
        if (best[i] == best[0]) side.insert(i);
    CHECK((side == *expected.begin() || side == *expected.rbegin()));
}

TEST_CASE("a triangle stays whole") {
    auto g = SimilarityGraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    auto comms = greedy_modularity_split(g, all_nodes(3));
    REQUIRE(comms.size() == 1);
    CHECK(comms[0] == std::vector<uint32_t>{0, 1, 2});

    // Enumerate all 5 partitions of 3 nodes: none beats the whole triangle.
    double best = oracle::best_modularity(3, g.edges);
    CHECK(best == doctest::Approx(0.0));
}

TEST_CASE("a star with two leaves stays whole") {
    auto g = SimilarityGraph::build(3, {{0, 1}, {0, 2}});
    auto comms = greedy_modularity_split(g, all_nodes(3));
    CHECK(comms.size() == 1);
}

TEST_CASE("edgeless component falls apart into singletons") {
    auto g = SimilarityGraph::build(4, {});
    auto comms = greedy_modularity_split(g, all_nodes(4));
    CHECK(comms.size() == 4);
}

TEST_CASE("greedy split modularity is at least as good as the unsplit community") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        uint32_t n = 4 + rng.below32(30);
        auto g = SimilarityGraph::build(n, random_connected_graph(n, 0.15, rng));
        auto comms = greedy_modularity_split(g, all_nodes(n));
        if (comms.size() < 2) continue;
        std::vector<uint32_t> labels(n, 0);
        for (uint32_t c = 0; c < comms.size(); ++c)
            for (uint32_t v : comms[c]) labels[v] = c;
        double split_q = oracle::modularity_direct(n, g.edges, labels);
        double whole_q = oracle::modularity_direct(n, g.edges, std::vector<uint32_t>(n, 0));
        CHECK(split_q >= whole_q - 1e-12);
    }
}

TEST_CASE("greedy split reaches at least 80% of the exhaustive best modularity") {
    Rng rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        uint32_t n = 8 + rng.below32(4);  // 8..11 nodes, exhaustive enumeration
        auto g = SimilarityGraph::build(n, random_connected_graph(n, 0.25, rng));
        auto comms = greedy_modularity_split(g, all_nodes(n));
        std::vector<uint32_t> labels(n, 0);
        for (uint32_t c = 0; c < comms.size(); ++c)
            for (uint32_t v : comms[c]) labels[v] = c;
        double greedy_q = oracle::modularity_direct(n, g.edges, labels);
        double best_q = oracle::best_modularity(n, g.edges);
        CHECK(greedy_q >= 0.8 * best_q - 1e-12);
    }
}

TEST_CASE("library modularity helper agrees with the direct formula") {
    Rng rng(55);
    auto edges = random_connected_graph(12, 0.3, rng);
    auto g = SimilarityGraph::build(12, edges);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<uint32_t> labels(12);
        for (auto& l : labels) l = rng.below32(4);
        auto nodes = all_nodes(12);
        CHECK(modularity(g, nodes, labels) ==
              doctest::Approx(oracle::modularity_direct(12, edges, labels)).epsilon(1e-9));
    }
}

TEST_CASE("tlsh_block honors the block size cap") {
    Dataset ds = generate_preset(rldata_analog_preset(1500, 77));
    TlshParams params;
    params.shingle_k = 2;
    params.permutations = 60;
    params.bands = 20;
    params.seed = 5;

    for (uint32_t t : {1u, 7u, 100u}) {
        params.max_block = t;
        auto res = tlsh_block(ds, params);
        CHECK(res.partition.is_valid());
        CHECK(res.partition.n() == ds.n());
        uint32_t max_size = 0;
        for (uint32_t s : res.partition.block_sizes()) max_size = std::max(max_size, s);
        CHECK(max_size <= t);
    }
}

TEST_CASE("cap above n reduces to connected components") {
    Dataset ds = generate_preset(rldata_analog_preset(400, 2));
    TlshParams params;
    params.shingle_k = 3;
    params.permutations = 40;
    params.bands = 10;
    params.max_block = ds.n();
    params.seed = 19;
    auto res = tlsh_block(ds, params);

    auto td = tokenize_dataset(ds, params.shingle_k);
    auto sig =
        minhash_signatures(incidence_matrix(td),
                           MinHashFamily::create(params.permutations, params.seed));
    auto g = SimilarityGraph::build(ds.n(), band_and_bucket(sig, params.bands));
    auto comps = connected_components(g);
    CHECK(res.partition.assignment == comps.assignment);
}

TEST_CASE("cap of one yields all singletons") {
    Dataset ds = generate_preset(rldata_analog_preset(200, 3));
    TlshParams params;
    params.shingle_k = 2;
    params.permutations = 30;
    params.bands = 10;
    params.max_block = 1;
    params.seed = 4;
    auto res = tlsh_block(ds, params);
    CHECK(res.partition.num_blocks == ds.n());
}

TEST_CASE("tlsh output is identical across thread counts and repeat runs") {
    Dataset ds = generate_preset(rldata_analog_preset(800, 15));
    TlshParams params;
    params.shingle_k = 2;
    params.permutations = 50;
    params.bands = 16;
    params.max_block = 40;
    params.seed = 23;

    params.threads = 1;
    auto a = tlsh_block(ds, params);
    auto b = tlsh_block(ds, params);
    params.threads = 4;
    auto c = tlsh_block(ds, params);
    CHECK(a.partition.assignment == b.partition.assignment);
    CHECK(a.partition.assignment == c.partition.assignment);
}
