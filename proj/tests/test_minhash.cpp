#include <set>

#include "blockkit/blockkit.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blockkit;

namespace {

// Incidence columns with a prescribed Jaccard similarity s = p/q: the two
// columns share 2p tokens and each carries q-p private ones.
IncidenceMatrix planted_pair_matrix(const std::vector<std::pair<int, int>>& ratios) {
    IncidenceMatrix m;
    uint32_t next_token = 0;
    for (auto [p, q] : ratios) {
        std::vector<uint32_t> shared, only_a, only_b;
        for (int t = 0; t < 2 * p; ++t) shared.push_back(next_token++);
        for (int t = 0; t < q - p; ++t) only_a.push_back(next_token++);
        for (int t = 0; t < q - p; ++t) only_b.push_back(next_token++);
        std::vector<uint32_t> a = shared, b = shared;
        a.insert(a.end(), only_a.begin(), only_a.end());
        b.insert(b.end(), only_b.begin(), only_b.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        m.columns.push_back(std::move(a));
        m.columns.push_back(std::move(b));
    }
    m.vocab_size = next_token;
    return m;
}

}  // namespace

TEST_CASE("identical supports give identical signature columns") {
    IncidenceMatrix m;
    m.vocab_size = 6;
    m.columns = {{0, 2, 4}, {0, 2, 4}, {1, 3, 5}};
    auto sig = minhash_signatures(m, MinHashFamily::create(64, 11));
    for (int r = 0; r < 64; ++r) {
        CHECK(sig.at(r, 0) == sig.at(r, 1));
    }
    bool all_equal = true;
    for (int r = 0; r < 64; ++r) all_equal = all_equal && sig.at(r, 0) == sig.at(r, 2);
    CHECK_FALSE(all_equal);
}

TEST_CASE("single column matrix") {
    IncidenceMatrix m;
    m.vocab_size = 3;
    m.columns = {{0, 1, 2}};
    auto sig = minhash_signatures(m, MinHashFamily::create(16, 5));
    CHECK(sig.n == 1);
    CHECK(sig.p == 16);
    CHECK(band_and_bucket(sig, 4).empty());
}

TEST_CASE("signature row agreement tracks Jaccard similarity") {
    // 20 planted pairs spanning similarity 0.1 .. 0.9, p = 2000 rows.
    std::vector<std::pair<int, int>> ratios = {
        {1, 10}, {3, 20}, {1, 5},  {1, 4},  {3, 10}, {7, 20}, {2, 5},
        {9, 20}, {1, 2},  {11, 20}, {3, 5},  {13, 20}, {7, 10}, {3, 4},
        {4, 5},  {17, 20}, {9, 10}, {1, 3},  {2, 3},  {5, 6}};
    IncidenceMatrix m = planted_pair_matrix(ratios);
    auto sig = minhash_signatures(m, MinHashFamily::create(2000, 271828));
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        double s = static_cast<double>(ratios[k].first) / ratios[k].second;
        uint32_t a = static_cast<uint32_t>(2 * k), b = a + 1;
        int agree = 0;
        for (int r = 0; r < sig.p; ++r)
            if (sig.at(r, a) == sig.at(r, b)) ++agree;
        double estimate = static_cast<double>(agree) / sig.p;
        CHECK(std::abs(estimate - s) < 0.04);
    }
}

TEST_CASE("banding limit cases") {
    Dataset ds = generate_preset(rldata_analog_preset(60, 13));
    auto td = tokenize_dataset(ds, 2);
    auto sig = minhash_signatures(incidence_matrix(td), MinHashFamily::create(20, 3));

    SUBCASE("b = p bands means an edge needs one agreeing row") {
        auto edges = band_and_bucket(sig, sig.p);
        auto expected = oracle::band_edges_bruteforce(sig, sig.p);
        std::set<std::pair<uint32_t, uint32_t>> got(edges.begin(), edges.end());
        CHECK(got == expected);
    }
    SUBCASE("b = 1 means the whole column must agree") {
        auto edges = band_and_bucket(sig, 1);
        auto expected = oracle::band_edges_bruteforce(sig, 1);
        std::set<std::pair<uint32_t, uint32_t>> got(edges.begin(), edges.end());
        CHECK(got == expected);
    }
    SUBCASE("b out of range is rejected") {
        CHECK_THROWS_AS(band_and_bucket(sig, 21), ParamError);
        CHECK_THROWS_AS(band_and_bucket(sig, 0), ParamError);
    }
}

TEST_CASE("banding equals brute-force band comparison on 100 records") {
    Dataset ds = generate_preset(rldata_analog_preset(100, 99));
    auto td = tokenize_dataset(ds, 2);

    SUBCASE("p divisible by b") {
        auto sig = minhash_signatures(incidence_matrix(td), MinHashFamily::create(100, 7));
        auto edges = band_and_bucket(sig, 20);
        std::set<std::pair<uint32_t, uint32_t>> got(edges.begin(), edges.end());
        CHECK(got == oracle::band_edges_bruteforce(sig, 20));
    }
    SUBCASE("remainder rows land in the last band") {
        auto sig = minhash_signatures(incidence_matrix(td), MinHashFamily::create(16, 7));
        auto edges = band_and_bucket(sig, 5);  // bands of 3,3,3,3,4
        std::set<std::pair<uint32_t, uint32_t>> got(edges.begin(), edges.end());
        CHECK(got == oracle::band_edges_bruteforce(sig, 5));
    }
}

TEST_CASE("edge emission is bucket-local, not all-pairs") {
    Dataset ds = generate_preset(rldata_analog_preset(2000, 123));
    auto td = tokenize_dataset(ds, 5);
    auto sig = minhash_signatures(incidence_matrix(td), MinHashFamily::create(100, 17));
    BandStats stats;
    auto edges = band_and_bucket(sig, 26, 1, &stats);
    CHECK(stats.emitted_pairs >= edges.size());
    // The whole point of bucketing: work is far below the all-pairs count.
    CHECK(stats.emitted_pairs < total_pair_count(ds.n()) / 20);
}

TEST_CASE("edge set is invariant to record order") {
    Dataset ds = generate_preset(rldata_analog_preset(120, 31));
    auto td = tokenize_dataset(ds, 2);
    IncidenceMatrix m = incidence_matrix(td);
    auto family = MinHashFamily::create(24, 5);
    auto edges = band_and_bucket(minhash_signatures(m, family), 8);

    // Reverse the column order and map the edges back.
    IncidenceMatrix rev;
    rev.vocab_size = m.vocab_size;
    rev.columns.assign(m.columns.rbegin(), m.columns.rend());
    auto rev_edges = band_and_bucket(minhash_signatures(rev, family), 8);
    uint32_t n = m.n();
    std::set<std::pair<uint32_t, uint32_t>> mapped;
    for (auto [a, b] : rev_edges) mapped.insert(make_record_pair(n - 1 - a, n - 1 - b));
    std::set<std::pair<uint32_t, uint32_t>> original(edges.begin(), edges.end());
    CHECK(mapped == original);
}

TEST_CASE("signatures are deterministic across thread counts") {
    Dataset ds = generate_preset(rldata_analog_preset(300, 8));
    auto td = tokenize_dataset(ds, 2);
    IncidenceMatrix m = incidence_matrix(td);
    auto family = MinHashFamily::create(32, 9);
    auto s1 = minhash_signatures(m, family, 1);
    auto s4 = minhash_signatures(m, family, 4);
    CHECK(s1.values == s4.values);
    CHECK(band_and_bucket(s1, 8, 1) == band_and_bucket(s4, 8, 4));
}
