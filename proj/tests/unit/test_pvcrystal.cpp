#include "osp/pvcrystal.hpp"

#include <doctest.h>

#include <algorithm>

using namespace osp;

namespace {

struct Example {
    AlgebraType g = AlgebraType::parse("b", 2, 3);
    HookPartition lambda = hook_partition({5, 3, 3, 2, 2}, 2, 3);
    PVCrystal P{g, lambda};
    PVElement b{P.rad().from_pairs({{{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 2}, 1},
                                    {{2, 4}, 1}, {{3, 4}, 2}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 5}, 1}}),
                tableau_from_rows({{1, 1, 1, 2, 2}, {2, 2, 3}, {3, 4, 5}, {4, 5}, {4, 5}}, 2, 3)};
};

}  // namespace

TEST_CASE("tensor example: f0 acts on c only") {
    Example ex;
    auto y = ex.P.f(0, ex.b);
    REQUIRE(y);
    CHECK(ex.P.rad().at(y->rad, 1, 1) == 3);
    CHECK(y->tab == ex.b.tab);
}

TEST_CASE("tensor example: f1 cubed splits as two on c and one on T") {
    Example ex;
    PVElement x = ex.b;
    for (int k = 0; k < 3; ++k) x = *ex.P.f(1, x);
    RadArray c2 = *ex.P.rad().f(1, *ex.P.rad().f(1, ex.b.rad));
    CHECK(x.rad == c2);
    CHECK(ex.P.rad().at(x.rad, 1, 1) == 1);
    CHECK(ex.P.rad().at(x.rad, 1, 2) == 1);
    CHECK(ex.P.rad().at(x.rad, 2, 2) == 4);
    CHECK(x.tab.to_string() == "1 1 2 2 2/2 2 3/3 4 5/4 5/4 5");
}

TEST_CASE("tensor example: f2 vanishes and f3 moves (1,3) to (1,4)") {
    Example ex;
    CHECK(!ex.P.f(2, ex.b));
    auto y = ex.P.f(3, ex.b);
    REQUIRE(y);
    CHECK(ex.P.rad().at(y->rad, 1, 3) == 0);
    CHECK(ex.P.rad().at(y->rad, 1, 4) == 1);
    CHECK(y->tab == ex.b.tab);
}

TEST_CASE("tensor crystal is a partial inverse pair") {
    for (const char* f : {"b", "c", "d"}) {
        AlgebraType g = AlgebraType::parse(f, 2, 2);
        PVCrystal P(g, hook_partition({2, 1}, 2, 2));
        for (const auto& b : truncated_vertices(P, 3))
            for (int i = 0; i < P.rank(); ++i) {
                if (auto y = P.f(i, b)) CHECK(P.e(i, *y) == b);
                if (auto y = P.e(i, b)) CHECK(P.f(i, *y) == b);
            }
    }
}

TEST_CASE("hw_scan on small truncations") {
    auto b22 = hw_scan(AlgebraType::parse("b", 2, 2), hook_partition({1}, 2, 2), 4);
    REQUIRE(b22.size() == 1);
    CHECK(b22.front().rad == RadCrystal(AlgebraType::parse("b", 2, 2)).zero());
    auto c22 = hw_scan(AlgebraType::parse("c", 2, 2), hook_partition({2}, 2, 2), 4);
    CHECK(c22.size() == 1);
}

TEST_CASE("a fake source in B(N) (x) B(V(lambda))") {
    AlgebraType g = AlgebraType::parse("b", 2, 2);
    PVCrystal P(g, hook_partition({1, 1}, 2, 2));
    PVElement b{P.rad().from_pairs({{{1, 4}, 1}}), tableau_from_rows({{2}, {3}}, 2, 2)};
    for (int i = 0; i < P.rank(); ++i) CHECK(!P.e(i, b));
    CHECK(!(b == P.highest()));
    CHECK(connects_to_highest(P, b));
}

TEST_CASE("connectivity report") {
    AlgebraType g = AlgebraType::parse("c", 2, 2);
    ConnectivityReport r = check_connectivity(g, hook_partition({2}, 2, 2), 4, 2);
    CHECK(r.ok());
    CHECK(r.connected());
    ConnectivityReport s = check_connectivity(AlgebraType::parse("b", 2, 2), hook_partition({1, 1}, 2, 2), 5, 2);
    CHECK(s.sources.size() == 2);
    CHECK(s.connected());
}

TEST_CASE("genuine highest elements of B(N)") {
    RadCrystal C(AlgebraType::parse("d", 2, 2));
    CHECK(genuine_shape(C, C.zero()) == hook_partition({}, 2, 2));
    CHECK(genuine_shape(C, C.from_pairs({{{1, 2}, 2}, {{3, 3}, 1}})) == hook_partition({2, 2, 1, 1}, 2, 2));
    RadArray fake = C.from_pairs({{{1, 2}, 1}, {{3, 3}, 1}, {{1, 4}, 1}});
    for (int i = 1; i < 4; ++i) CHECK(!C.e(i, fake));
    CHECK(!genuine_shape(C, fake));
}

TEST_CASE("branching at small degree") {
    for (const char* f : {"b", "c", "d"}) {
        BranchingReport r = l_branching(AlgebraType::parse(f, 2, 2), 0);
        CHECK(r.multiplicity.size() == 1);
        CHECK(r.multiplicity.begin()->first.parts.empty());
        CHECK(r.ok());
    }
    BranchingReport c = l_branching(AlgebraType::parse("c", 2, 2), 6);
    for (const auto& [mu, k] : c.multiplicity) {
        CHECK(k == 1);
        for (int p : mu.parts) CHECK(p % 2 == 0);
    }
    CHECK(c.ok());
}

TEST_CASE("graph export") {
    AlgebraType g = AlgebraType::parse("b", 2, 2);
    CrystalGraph empty = build_graph(g, hook_partition({}, 2, 2), 0);
    CHECK(empty.vertices.size() == 1);
    CHECK(empty.edges.empty());
    CrystalGraph G = build_graph(g, hook_partition({1}, 2, 2), 3, 2);
    std::string dot = graph_to_dot(G);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t p = dot.find("\n  v"); p != std::string::npos; p = dot.find("\n  v", p + 1)) {
        std::size_t eol = dot.find('\n', p + 1);
        if (dot.substr(p, eol - p).find("->") == std::string::npos) ++nodes;
        else ++edges;
    }
    CHECK(nodes == G.vertices.size());
    CHECK(edges == G.edges.size());
    RadCrystal C(g);
    CHECK(std::is_sorted(G.vertices.begin(), G.vertices.end(), [&](const PVElement& a, const PVElement& b) {
        return C.degree(a.rad) < C.degree(b.rad);
    }));
}

TEST_CASE("vertex cap") {
    AlgebraType g = AlgebraType::parse("b", 3, 3);
    CHECK_THROWS_AS(build_graph(g, hook_partition({2, 1}, 3, 3), 6, 1, 100), ResourceError);
}
