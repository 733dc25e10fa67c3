#include <map>
#include <sstream>

#include "blockkit/blockkit.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blockkit;

namespace {

FieldSchema two_name_schema() {
    FieldSchema s;
    s.names = {"fname", "lname"};
    s.kinds = {FieldKind::Text, FieldKind::Text};
    return s;
}

}  // namespace

TEST_CASE("load_csv ingests a small file") {
    std::istringstream in(
        "rec_id,ent_id,fname,lname\n"
        "a1,1,Alice,Smith\n"
        "a2,2,bob,  jones \n"
        "a3,1,alice,smyth\n");
    Dataset ds = load_csv_stream(in, two_name_schema(), "rec_id", "ent_id");
    CHECK(ds.n() == 3);
    CHECK(ds[0].values[0] == "ALICE");
    CHECK(ds[1].values[1] == "JONES");
    CHECK(ds[0].source_id == "a1");
    CHECK(ds[2].entity == 1);
}

TEST_CASE("load_csv error taxonomy") {
    SUBCASE("missing entity column") {
        std::istringstream in("rec_id,fname,lname\n1,A,B\n");
        CHECK_THROWS_AS(load_csv_stream(in, two_name_schema(), "rec_id", "ent_id"),
                        IntegrityError);
    }
    SUBCASE("missing schema field") {
        std::istringstream in("rec_id,ent_id,fname\n1,1,A\n");
        CHECK_THROWS_AS(load_csv_stream(in, two_name_schema(), "rec_id", "ent_id"),
                        SchemaError);
    }
    SUBCASE("duplicate record id") {
        std::istringstream in("rec_id,ent_id,fname,lname\n7,1,A,B\n7,2,C,D\n");
        CHECK_THROWS_AS(load_csv_stream(in, two_name_schema(), "rec_id", "ent_id"),
                        IntegrityError);
    }
    SUBCASE("short row names the line") {
        std::istringstream in("rec_id,ent_id,fname,lname\n1,1,A,B\n2,2,C\n");
        try {
            load_csv_stream(in, two_name_schema(), "rec_id", "ent_id");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("unparseable entity names the line") {
        std::istringstream in("rec_id,ent_id,fname,lname\n1,xx,A,B\n");
        CHECK_THROWS_AS(load_csv_stream(in, two_name_schema(), "rec_id", "ent_id"),
                        ParseError);
    }
}

TEST_CASE("load_csv without id column falls back to row index") {
    std::istringstream in("ent_id,fname,lname\n5,A,B\n6,C,D\n");
    Dataset ds = load_csv_stream(in, two_name_schema(), "", "ent_id");
    CHECK(ds[0].source_id == "0");
    CHECK(ds[1].source_id == "1");
}

TEST_CASE("quoted cells, embedded commas and quotes") {
    std::istringstream in(
        "rec_id,ent_id,fname,lname\n"
        "1,1,\"Al, ice\",\"Sm\"\"ith\"\n");
    Dataset ds = load_csv_stream(in, two_name_schema(), "rec_id", "ent_id");
    CHECK(ds[0].values[0] == "AL, ICE");
    CHECK(ds[0].values[1] == "SM\"ITH");
}

TEST_CASE("normalize_value") {
    CHECK(normalize_value(" m\xc3\xbcller ", FieldKind::Text) == "M\xc3\x9cLLER");
    CHECK(normalize_value("7", FieldKind::Date) == "07");
    CHECK(normalize_value("a  b", FieldKind::Text) == "A B");
    CHECK(normalize_value("12", FieldKind::Date) == "12");
    CHECK(normalize_value("1975", FieldKind::Date) == "1975");
    CHECK(normalize_value("", FieldKind::Text) == "");
    CHECK(normalize_value("\t x\ty ", FieldKind::Text) == "X Y");
    CHECK(normalize_value("7", FieldKind::NumericAsText) == "7");
}

TEST_CASE("true_pairs") {
    auto make = [](std::vector<int64_t> entities) {
        FieldSchema s;
        s.names = {"f"};
        s.kinds = {FieldKind::Text};
        std::vector<Record> recs;
        for (std::size_t i = 0; i < entities.size(); ++i) {
            recs.push_back({static_cast<uint32_t>(i), entities[i], std::to_string(i), {"X"}});
        }
        return Dataset(s, std::move(recs));
    };

    SUBCASE("single duplicated entity") {
        auto pairs = true_pairs(make({1, 1, 2}));
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == RecordPair{0, 1});
    }
    SUBCASE("all distinct") { CHECK(true_pairs(make({1, 2, 3})).empty()); }
    SUBCASE("triple group gives C(3,2) pairs") {
        CHECK(true_pairs(make({7, 7, 7})).size() == 3);
    }
    SUBCASE("pair total matches sum of C(group, 2) on random data") {
        Rng rng(99);
        std::vector<int64_t> entities;
        for (int i = 0; i < 800; ++i) entities.push_back(static_cast<int64_t>(rng.below(200)));
        auto ds = make(entities);
        std::map<int64_t, uint64_t> groups;
        for (int64_t e : entities) ++groups[e];
        uint64_t expected = 0;
        for (auto& [e, g] : groups) expected += g * (g - 1) / 2;
        CHECK(true_pairs(ds).size() == expected);
    }
}

TEST_CASE("load is deterministic and round-trips through write_csv") {
    GeneratorPreset preset = rldata_analog_preset(200, 7);
    Dataset ds = generate_preset(preset);
    std::string csv = dataset_to_csv(ds);

    std::istringstream in1(csv), in2(csv);
    Dataset a = load_csv_stream(in1, preset.schema, "rec_id", "ent_id");
    Dataset b = load_csv_stream(in2, preset.schema, "rec_id", "ent_id");
    CHECK(dataset_to_csv(a) == dataset_to_csv(b));
    CHECK(dataset_to_csv(a) == csv);
    for (uint32_t i = 0; i < ds.n(); ++i) {
        CHECK(a[i].values == ds[i].values);
        CHECK(a[i].entity == ds[i].entity);
    }
}
