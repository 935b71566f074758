#include "osp/roots.hpp"

#include <doctest.h>

using namespace osp;

TEST_CASE("radical root counts") {
    CHECK(RootSystem(AlgebraType::parse("b", 2, 3)).n_rad() == 15);
    CHECK(RootSystem(AlgebraType::parse("c", 2, 3)).n_rad() == 12);
    CHECK(RootSystem(AlgebraType::parse("d", 3, 3)).n_rad() == 18);
    CHECK(RootSystem(AlgebraType::parse("d", 2, 2)).n_rad() == 8);
}

TEST_CASE("c_{2|3} triangle in PBW order") {
    RootSystem rs(AlgebraType::parse("c", 2, 3));
    std::vector<std::pair<int, int>> expect = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4},
                                                {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    REQUIRE(rs.n_rad() == 12);
    for (int k = 0; k < 12; ++k) {
        CHECK(rs.rad(k).i == expect[static_cast<std::size_t>(k)].first);
        CHECK(rs.rad(k).j == expect[static_cast<std::size_t>(k)].second);
        CHECK(rs.rad_index(rs.rad(k).i, rs.rad(k).j) == k);
    }
    CHECK(rs.rad_index(3, 3) == -1);
    CHECK(rs.rad(3).parity == Parity::isotropic);
    CHECK(rs.rad(7).parity == Parity::even);
}

TEST_CASE("diagonal radical roots per family") {
    RootSystem b(AlgebraType::parse("b", 2, 2)), c(AlgebraType::parse("c", 2, 2)), d(AlgebraType::parse("d", 2, 2));
    CHECK(b.rad(b.rad_index(1, 1)).weight == Weight{-1, 0, 0, 0});
    CHECK(b.rad(b.rad_index(3, 3)).parity == Parity::nonisotropic_odd);
    CHECK(c.rad(c.rad_index(1, 1)).weight == Weight{-2, 0, 0, 0});
    CHECK(c.rad_index(3, 3) == -1);
    CHECK(d.rad_index(1, 1) == -1);
    CHECK(d.rad(d.rad_index(3, 3)).weight == Weight{0, 0, -2, 0});
}

TEST_CASE("height from simple coordinates") {
    for (const char* f : {"b", "c", "d"})
        for (int m = 2; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                RootSystem rs(AlgebraType::parse(f, m, n));
                for (const Root& r : rs.radical()) {
                    CHECK(rs.height2(r.weight) == 2 * r.ht);
                    int sum = 0;
                    for (int x : r.coeffs) sum += x;
                    CHECK(sum == r.ht);
                    CHECK(static_cast<int>(r.word.size()) == r.ht);
                    CHECK(is_lyndon(r.word));
                }
            }
}

TEST_CASE("roots are sorted by PBW order with words matching weights") {
    RootSystem rs(AlgebraType::parse("b", 2, 3));
    for (const Root& r : rs.all_roots()) CHECK(rs.weight_of_word(r.word) == r.weight);
    for (std::size_t k = 1; k < rs.all_roots().size(); ++k)
        CHECK(rs.all_roots()[k - 1].word < rs.all_roots()[k].word);
}

TEST_CASE("algebra type validation") {
    CHECK_THROWS_AS(AlgebraType::parse("a", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraType::parse("b", 1, 2), std::invalid_argument);
    CHECK(AlgebraType::parse("d", 3, 2).name() == "d_{3|2}");
}
