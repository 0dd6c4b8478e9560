#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "imprim/constructions.hpp"
#include "imprim/itype.hpp"
#include "imprim/report.hpp"

using namespace imprim;

TEST_CASE("itype set JSON round trip") {
    for (const char* text : {"8,8", "30,24,12", "1,5,10,10,10,10,10,10", "7,4"}) {
        const auto its = i_type_set(Partition::parse(text));
        const json j = itype_set_to_json(its);
        const ITypeSet back = itype_set_from_json(j);
        CHECK(back.n == its.n);
        REQUIRE(back.entries.size() == its.entries.size());
        for (const auto& [pr, w] : its.entries) {
            REQUIRE(back.entries.count(pr) == 1);
            const auto& bw = back.entries.at(pr);
            CHECK(bw.k_i == w.k_i);
            CHECK(bw.clustering.clusters == w.clustering.clusters);
        }
    }
}

TEST_CASE("itype JSON shape is stable") {
    const json j = itype_set_to_json(i_type_set(Partition::parse("8,8")));
    CHECK(j["n"] == 16);
    REQUIRE(j["itype"].is_array());
    CHECK(j["itype"].size() == 3);
    CHECK(j["itype"][0] == json::array({2, 8}));
    CHECK(j["witnesses"].contains("2,8"));
    CHECK(j["witnesses"]["2,8"].contains("clusters"));
    CHECK(j["witnesses"]["2,8"].contains("k_i"));
}

TEST_CASE("group file round trip") {
    const PermutationGroup g = symmetric_group(4);
    std::ostringstream out;
    write_group(out, g);
    std::istringstream in(out.str());
    const PermutationGroup back = read_group(in);
    CHECK(back.degree() == 4);
    CHECK(back.order() == 24);
    for (const auto& gen : g.generators()) CHECK(back.contains(gen));
}

TEST_CASE("group files accept comments and blank lines") {
    std::istringstream in(
        "# a dihedral group\n"
        "\n"
        "degree 6\n"
        "(1,2,3,4,5,6)   # rotation\n"
        "(2,6)(3,5)\n");
    const PermutationGroup g = read_group(in);
    CHECK(g.degree() == 6);
    CHECK(g.order() == 12);
}

TEST_CASE("group file rejections") {
    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_group(in), parse_error);
    };
    reject("");                                  // no header
    reject("degree\n(1,2)\n");                   // missing count
    reject("degree 0\n");                        // degree out of range
    reject("degree 3 extra\n(1,2)\n");           // trailing tokens
    reject("order 6\n(1,2)\n");                  // wrong keyword
    reject("degree 3\n(1,4)\n");                 // point out of range
    reject("degree 3\n(1,2\n");                  // malformed cycle
}

TEST_CASE("schema validator accepts and rejects") {
    const json schema = json::parse(R"({
        "type": "object",
        "required": ["name", "kind"],
        "properties": {
            "name": {"type": "string"},
            "kind": {"type": "string", "enum": ["a", "b"]},
            "count": {"type": "integer"},
            "tags": {"type": "array", "items": {"type": "string"}}
        },
        "additionalProperties": false
    })");

    std::string err;
    CHECK(validate_against_schema(
        json::parse(R"({"name":"x","kind":"a","count":3,"tags":["t"]})"),
        schema, &err));

    CHECK(!validate_against_schema(json::parse(R"({"name":"x"})"), schema, &err));
    CHECK(err.find("kind") != std::string::npos);

    CHECK(!validate_against_schema(
        json::parse(R"({"name":"x","kind":"c"})"), schema, &err));

    CHECK(!validate_against_schema(
        json::parse(R"({"name":"x","kind":"a","extra":1})"), schema, &err));
    CHECK(err.find("extra") != std::string::npos);

    CHECK(!validate_against_schema(
        json::parse(R"({"name":"x","kind":"a","tags":["t",3]})"), schema, &err));
    CHECK(err.find("tags") != std::string::npos);

    CHECK(!validate_against_schema(
        json::parse(R"({"name":1,"kind":"a"})"), schema, &err));

    // integers satisfy "number"
    const json num_schema = json::parse(R"({"type": "number"})");
    CHECK(validate_against_schema(json(3), num_schema));
    CHECK(validate_against_schema(json(3.5), num_schema));
    const json int_schema = json::parse(R"({"type": "integer"})");
    CHECK(!validate_against_schema(json(3.5), int_schema));
}

TEST_CASE("schema validator handles nested additionalProperties schemas") {
    const json schema = json::parse(R"({
        "type": "object",
        "additionalProperties": {
            "type": "object",
            "required": ["value", "exhaustive"],
            "properties": {
                "value": {},
                "exhaustive": {"type": "boolean"},
                "witness": {}
            },
            "additionalProperties": false
        }
    })");
    CHECK(validate_against_schema(
        json::parse(R"({"np1":{"value":true,"exhaustive":true}})"), schema));
    std::string err;
    CHECK(!validate_against_schema(
        json::parse(R"({"np1":{"value":true}})"), schema, &err));
    CHECK(err.find("np1") != std::string::npos);
}
