#include "osp/radcrystal.hpp"

#include <doctest.h>

#include <functional>

using namespace osp;

namespace {

using Pairs = std::map<std::pair<int, int>, int>;

// arrays of degree <= D, counted over the root list directly
long count_arrays(const RootSystem& rs, int D) {
    long count = 0;
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == rs.n_rad()) {
            ++count;
            return;
        }
        const Root& r = rs.rad(k);
        int cap = r.parity == Parity::isotropic ? 1 : left / r.ht;
        for (int e = 0; e <= cap && e * r.ht <= left; ++e) rec(k + 1, left - e * r.ht);
    };
    rec(0, D);
    return count;
}

}  // namespace

TEST_CASE("b_{2|3} worked example") {
    RadCrystal C(AlgebraType::parse("b", 2, 3));
    RadArray c = C.from_pairs({{{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 2}, 1},
                               {{2, 4}, 1}, {{3, 4}, 2}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 5}, 1}});
    CHECK(C.weight(c) == Weight{6, 4, 4, 4, 3});
    CHECK(C.eps_phi(1, c) == std::pair{2, 4});
    CHECK(C.eps_phi(3, c) == std::pair{1, 1});
    CHECK(C.to_string(*C.f(1, c)) ==
          "{(1,1):1, (1,2):2, (1,3):1, (1,5):1, (2,2):2, (2,4):1, (3,4):2, (3,5):1, (4,4):1, (5,5):1}");
    CHECK(!C.f(2, c));
    CHECK(*C.f(3, c) == C.from_pairs({{{1, 1}, 2}, {{1, 2}, 2}, {{1, 4}, 1}, {{1, 5}, 1}, {{2, 2}, 1},
                                       {{2, 4}, 1}, {{3, 4}, 2}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 5}, 1}}));
}

TEST_CASE("c_{2|3} worked example") {
    RadCrystal C(AlgebraType::parse("c", 2, 3));
    RadArray c = C.from_pairs({{{1, 1}, 1}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 4}, 1}, {{3, 5}, 2}, {{4, 5}, 1}});
    CHECK(C.eps_phi(1, c) == std::pair{0, 3});
    CHECK(C.eps_phi(3, c) == std::pair{1, 2});
    RadArray x = c;
    for (int k = 0; k < 3; ++k) x = *C.f(1, x);
    CHECK(x == C.from_pairs({{{2, 2}, 1}, {{1, 3}, 1}, {{2, 4}, 1}, {{2, 5}, 1}, {{3, 5}, 2}, {{4, 5}, 1}}));
    CHECK(!C.f(1, x));
    RadArray y = *C.f(3, *C.f(3, c));
    CHECK(y == C.from_pairs({{{1, 1}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{1, 5}, 1}, {{3, 5}, 1}, {{4, 5}, 2}}));
}

TEST_CASE("d_{3|3} worked example") {
    RadCrystal C(AlgebraType::parse("d", 3, 3));
    RadArray c = C.from_pairs({{{1, 3}, 2}, {{1, 5}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{2, 6}, 1}, {{3, 4}, 1},
                               {{3, 6}, 1}, {{4, 4}, 2}, {{4, 5}, 2}, {{4, 6}, 3}, {{5, 5}, 1}, {{5, 6}, 2}});
    CHECK(C.eps_phi(4, c) == std::pair{2, 6});
    RadArray x = c;
    for (int k = 0; k < 6; ++k) x = *C.f(4, x);
    CHECK(x == C.from_pairs({{{1, 3}, 2}, {{2, 3}, 1}, {{2, 4}, 1}, {{1, 5}, 1}, {{3, 5}, 1}, {{4, 5}, 2},
                             {{5, 5}, 3}, {{2, 6}, 1}, {{3, 6}, 1}, {{4, 6}, 2}, {{5, 6}, 3}}));
    CHECK(!C.f(4, x));
}

TEST_CASE("enumeration counts match a direct count") {
    for (const char* f : {"b", "c", "d"})
        for (int n = 1; n <= 3; ++n) {
            RadCrystal C(AlgebraType::parse(f, 2, n));
            for (int D = 0; D <= 6; ++D)
                CHECK(static_cast<long>(C.enumerate(D).size()) == count_arrays(C.roots(), D));
        }
}

TEST_CASE("crystal axioms on B(N)") {
    for (const char* f : {"b", "c", "d"})
        for (int m = 2; m <= 3; ++m)
            for (int n = 1; n <= 2; ++n) {
                RadCrystal C(AlgebraType::parse(f, m, n));
                const RootSystem& rs = C.roots();
                for (const RadArray& x : C.enumerate(6)) {
                    CHECK(2 * C.degree(x) == rs.height2(-C.weight(x)));
                    for (int i = 1; i < rs.N(); ++i) {
                        CHECK(C.eps_phi(i, x) == C.string_lengths(i, x));
                        if (auto y = C.f(i, x)) {
                            CHECK(C.valid(*y));
                            CHECK(C.e(i, *y) == x);
                            Weight d = C.weight(*y) - C.weight(x);
                            CHECK(d == -rs.simple_roots()[static_cast<std::size_t>(i)]);
                        }
                        if (auto y = C.e(i, x)) CHECK(C.f(i, *y) == x);
                    }
                    if (auto y = C.f(0, x)) {
                        CHECK(C.e(0, *y) == x);
                        CHECK(C.degree(*y) == C.degree(x) + 1);
                    }
                }
            }
}

TEST_CASE("isotropic entries stay at most one") {
    RadCrystal C(AlgebraType::parse("b", 2, 2));
    CHECK_THROWS_AS(C.from_pairs({{{1, 3}, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(C.from_pairs({{{2, 1}, 1}}), std::invalid_argument);
}
