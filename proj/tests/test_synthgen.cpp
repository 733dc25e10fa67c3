#include <map>
#include <set>

#include "blockkit/blockkit.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blockkit;

TEST_CASE("duplicate_count solves d = ceil(fraction * total)") {
    CHECK(duplicate_count(9000, 0.1) == 1000);
    CHECK(duplicate_count(450, 0.1) == 50);
    CHECK(duplicate_count(7000, 0.3) == 3000);
    CHECK(duplicate_count(5000, 0.5) == 5000);
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n_orig = 1 + rng.below32(5000);
        double f = 0.01 + 0.9 * rng.next_double();
        uint32_t d = duplicate_count(n_orig, f);
        uint64_t total = n_orig + d;
        CHECK(d == static_cast<uint32_t>(std::ceil(f * total - 1e-9)));
    }
}

TEST_CASE("rldata analog shape: 9000 originals + 1000 one-error duplicates") {
    Dataset ds = generate_preset(rldata_analog_preset(10000, 42));
    CHECK(ds.n() == 10000);
    auto truth = true_pairs(ds);
    CHECK(truth.size() == 1000);

    // One error: a duplicate disagrees with its original on exactly one field.
    for (const auto& [a, b] : truth) {
        int disagreements = 0;
        for (std::size_t f = 0; f < ds[a].values.size(); ++f) {
            if (ds[a].values[f] != ds[b].values[f]) ++disagreements;
        }
        CHECK(disagreements == 1);
    }
}

TEST_CASE("corruption spec validation") {
    CorruptionSpec spec;
    spec.duplicate_fraction = 0.0;
    CHECK_THROWS_AS(spec.validate(), ParamError);
    spec.duplicate_fraction = 1.0;
    CHECK_THROWS_AS(spec.validate(), ParamError);
    spec.duplicate_fraction = 0.5;
    spec.errors_per_duplicate = 0;
    CHECK_THROWS_AS(spec.validate(), ParamError);
    spec.errors_per_duplicate = 1;
    spec.error_kinds = {{ErrorKind::DeleteChar, 0.0}};
    CHECK_THROWS_AS(spec.validate(), ParamError);
    spec.error_kinds = {{ErrorKind::DeleteChar, -1.0}};
    CHECK_THROWS_AS(spec.validate(), ParamError);
    spec.error_kinds.clear();
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("fraction too high for the duplicate cap is rejected") {
    GeneratorPreset p = rldata_analog_preset(100, 1);
    p.spec.duplicate_fraction = 0.6;  // needs 1.5 duplicates per original, cap is 1
    CHECK_THROWS_AS(generate(p.n_originals, p.schema, p.pools, p.spec), ParamError);
}

TEST_CASE("same seed reproduces byte-identical datasets") {
    Dataset a = generate_preset(rldata_analog_preset(500, 9));
    Dataset b = generate_preset(rldata_analog_preset(500, 9));
    CHECK(dataset_to_csv(a) == dataset_to_csv(b));
    Dataset c = generate_preset(rldata_analog_preset(500, 10));
    CHECK(dataset_to_csv(a) != dataset_to_csv(c));
}

TEST_CASE("generation is independent of thread count") {
    GeneratorPreset p = noisy_analog_preset(600, 0.3, 21);
    Dataset a = generate(p.n_originals, p.schema, p.pools, p.spec, 1);
    Dataset b = generate(p.n_originals, p.schema, p.pools, p.spec, 4);
    CHECK(dataset_to_csv(a) == dataset_to_csv(b));
}

TEST_CASE("apply_char_edit worked examples") {
    CHECK(apply_char_edit("SMITH", ErrorKind::DeleteChar, 2, 0) == "SMTH");
    CHECK(apply_char_edit("AB", ErrorKind::TransposeAdjacent, 0, 0) == "BA");
    CHECK(apply_char_edit("1975", ErrorKind::SubstituteChar, 3, '9') == "1979");
    CHECK(apply_char_edit("AB", ErrorKind::InsertChar, 1, 'X') == "AXB");
    CHECK(apply_char_edit("AB", ErrorKind::InsertChar, 2, 'X') == "ABX");
}

TEST_CASE("corrupt_value always changes the value") {
    Rng rng(77);
    const std::string alpha = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::vector<std::string> inputs = {"A", "AB", "AA", "SMITH", "M\xc3\x9cLLER", "1975", "07"};
    std::vector<ErrorKind> kinds = {ErrorKind::SubstituteChar, ErrorKind::DeleteChar,
                                    ErrorKind::InsertChar, ErrorKind::TransposeAdjacent};
    for (const auto& input : inputs) {
        for (ErrorKind kind : kinds) {
            for (int rep = 0; rep < 20; ++rep) {
                std::string out = corrupt_value(input, kind, rng, alpha);
                CHECK(out != input);
            }
        }
    }
    SUBCASE("empty input falls back to insertion") {
        std::string out = corrupt_value("", ErrorKind::DeleteChar, rng, alpha);
        CHECK(out.size() == 1);
    }
    SUBCASE("all-equal characters cannot transpose, still change") {
        std::string out = corrupt_value("AAA", ErrorKind::TransposeAdjacent, rng, alpha);
        CHECK(out != "AAA");
        CHECK(out.size() == 3);  // degraded to substitution
    }
}

TEST_CASE("duplicates stay within the error budget in edit distance") {
    // Transpositions count one edit, so the budget is checked with a distance
    // whose operation set matches the generator's.
    GeneratorPreset p = noisy_analog_preset(400, 0.3, 5);
    Dataset ds = generate_preset(p);
    auto truth = true_pairs(ds);
    REQUIRE(!truth.empty());
    for (const auto& [a, b] : truth) {
        uint32_t total = 0;
        for (std::size_t f = 0; f < ds[a].values.size(); ++f)
            total += oracle::damerau_levenshtein(ds[a].values[f], ds[b].values[f]);
        CHECK(total >= 1);
        CHECK(total <= 2 * 5u);  // pairs of duplicates share a budget of 5 each
    }
}

TEST_CASE("one-error duplicates are within plain edit distance 2 of the original") {
    Dataset ds = generate_preset(rldata_analog_preset(1000, 3));
    for (const auto& [a, b] : true_pairs(ds)) {
        uint32_t total = 0;
        for (std::size_t f = 0; f < ds[a].values.size(); ++f)
            total += oracle::levenshtein_matrix(ds[a].values[f], ds[b].values[f]);
        CHECK(total >= 1);
        CHECK(total <= 2);  // one transposition costs two plain edits
    }
}

TEST_CASE("duplicates per original never exceed the cap") {
    GeneratorPreset p = noisy_analog_preset(300, 0.5, 8);
    Dataset ds = generate_preset(p);
    std::map<int64_t, uint32_t> group_sizes;
    for (const Record& r : ds.records()) ++group_sizes[r.entity];
    for (const auto& [e, size] : group_sizes) CHECK(size <= 1 + 5u);
}

TEST_CASE("non-transposing error kinds respect the plain Levenshtein budget") {
    GeneratorPreset p = noisy_analog_preset(300, 0.3, 4);
    p.spec.error_kinds = {{ErrorKind::SubstituteChar, 1.0},
                          {ErrorKind::DeleteChar, 1.0},
                          {ErrorKind::InsertChar, 1.0}};
    Dataset ds = generate_preset(p);
    std::map<int64_t, std::vector<uint32_t>> groups;
    for (const Record& r : ds.records()) groups[r.entity].push_back(r.id);
    uint32_t n_orig = p.n_originals;
    for (const auto& [e, members] : groups) {
        for (uint32_t m : members) {
            if (m < n_orig) continue;  // original
            uint32_t original = members.front();
            uint32_t total = 0;
            for (std::size_t f = 0; f < ds[m].values.size(); ++f)
                total += oracle::levenshtein_matrix(ds[original].values[f], ds[m].values[f]);
            CHECK(total >= 1);
            CHECK(total <= 5u);
        }
    }
}

TEST_CASE("swap-fields errors change two fields at once") {
    GeneratorPreset p = rldata_analog_preset(200, 6);
    p.spec.error_kinds = {{ErrorKind::SwapFields, 1.0}};
    Dataset ds = generate_preset(p);
    for (const auto& [a, b] : true_pairs(ds)) {
        int diff = 0;
        for (std::size_t f = 0; f < ds[a].values.size(); ++f)
            if (ds[a].values[f] != ds[b].values[f]) ++diff;
        // A swap touches two fields unless the swapped values were equal; the
        // generator redraws identical duplicates, so at least one differs.
        CHECK(diff >= 1);
        CHECK(diff <= 2);
    }
}
