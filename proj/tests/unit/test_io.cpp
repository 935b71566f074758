#include "osp/io.hpp"

#include <doctest.h>

#include <random>

using namespace osp;
using osp::io::json;

TEST_CASE("scalar JSON round trip") {
    Scalar a = (Scalar::q_pow(-2) - Scalar::q_pow(2)) / (Scalar(3) + Scalar::q());
    json j = io::scalar_to_json(a);
    CHECK(j.contains("num"));
    CHECK(j.contains("den"));
    CHECK(io::scalar_from_json(j) == a);
    Scalar big = q_int_fact(12, 2) * q_int_fact(12, 2);
    CHECK(io::scalar_from_json(json::parse(io::scalar_to_json(big).dump())) == big);
}

TEST_CASE("exponent array JSON") {
    RadCrystal C(AlgebraType::parse("d", 3, 3));
    RadArray c = C.from_pairs({{{1, 3}, 2}, {{1, 5}, 1}, {{4, 6}, 3}});
    json j = io::rad_to_json(C, c);
    CHECK(j.dump() == R"({"c":{"1,3":2,"1,5":1,"4,6":3}})");
    CHECK(io::rad_from_json(C, j) == c);
    CHECK(io::rad_from_json(C, json::parse(R"({"c":{"4,6":3,"1,3":2,"1,5":1,"1,4":0}})")) == c);
    CHECK_THROWS_AS(io::rad_from_json(C, json::parse(R"({"c":{"1,1":1}})")), std::invalid_argument);
}

TEST_CASE("tensor element JSON") {
    AlgebraType g = AlgebraType::parse("b", 2, 3);
    PVCrystal P(g, hook_partition({5, 3, 3, 2, 2}, 2, 3));
    PVElement b{P.rad().from_pairs({{{1, 1}, 2}, {{1, 3}, 1}, {{4, 5}, 1}}),
                tableau_from_rows({{1, 1, 1, 2, 2}, {2, 2, 3}, {3, 4, 5}, {4, 5}, {4, 5}}, 2, 3)};
    json j = io::pv_to_json(P, b);
    CHECK(j.at("tableau").size() == 5);
    CHECK(io::pv_from_json(P, j) == b);
    json bad = j;
    bad["tableau"] = json::parse("[[1]]");
    CHECK_THROWS(io::pv_from_json(P, bad));
}

TEST_CASE("graph JSON round trip") {
    for (const char* f : {"b", "c", "d"}) {
        AlgebraType g = AlgebraType::parse(f, 2, 2);
        CrystalGraph G = build_graph(g, hook_partition({2, 1}, 2, 2), 3, 2);
        std::string text = io::graph_to_json(G).dump();
        CrystalGraph H = io::graph_from_json(json::parse(text));
        CHECK(H.vertices == G.vertices);
        CHECK(H.edges == G.edges);
        CHECK(H.max_degree == G.max_degree);
        CHECK(io::graph_to_json(H).dump() == text);
    }
}

TEST_CASE("root listing JSON") {
    json j = io::roots_to_json(RootSystem(AlgebraType::parse("c", 2, 3)));
    REQUIRE(j.size() == 12);
    CHECK(j[0].dump() == R"({"pos":0,"i":1,"j":1,"class":"even","weight":[-2,0,0,0,0],"ht":1})");
    CHECK(j[3].at("class") == "isotropic");
}

TEST_CASE("integer lists") {
    CHECK(io::parse_int_list("5,3,3,2,2") == std::vector<int>{5, 3, 3, 2, 2});
    CHECK(io::parse_int_list("(1, 2)") == std::vector<int>{1, 2});
    CHECK(io::parse_int_list("").empty());
    CHECK_THROWS(io::parse_int_list("1,x"));
}
