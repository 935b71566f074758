#include "osp/hooktab.hpp"

#include <doctest.h>

#include <set>

using namespace osp;

namespace {

// number of (m|n)-semistandard fillings, counted box by box without the crystal code
long count_sst(int m, int n, const std::vector<int>& shape) {
    std::vector<std::vector<int>> t;
    for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int a = 1; a <= m + n; ++a) {
            bool odd = a > m;
            if (c > 0) {
                int left = t[r][c - 1];
                if (a < left || (odd && a == left)) continue;
            }
            if (r > 0) {
                int up = t[r - 1][c];
                if (a < up || (!odd && a == up)) continue;
            }
            t[r][c] = a;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("hook partitions") {
    CHECK(is_hook({5, 3, 3, 2, 2}, 2, 3));
    CHECK(!is_hook({4, 4, 4}, 2, 1));
    CHECK_THROWS_AS(hook_partition({1, 2}, 2, 2), std::invalid_argument);
    CHECK(conjugate({3, 1}) == std::vector<int>{2, 1, 1});
    for (const auto& lam : hook_partitions(2, 1, 6)) CHECK(is_hook(lam.parts, 2, 1));
}

TEST_CASE("highest weight of the genuine highest tableau") {
    auto lam = hook_partition({5, 3, 3, 2, 2}, 2, 3);
    CHECK(genuine_hw(2, 3, lam).to_string() == "1 1 1 1 1/2 2 2/3 4 5/3 4/3 4");
    CHECK(hw_weight(2, 3, lam) == Weight{5, 3, 3, 3, 1});
    CHECK(partition_of_weight(2, 3, Weight{5, 3, 3, 3, 1}) == lam);
}

TEST_CASE("tableau enumeration matches a direct count") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (const auto& lam : hook_partitions(m, n, 4)) {
                auto all = enumerate_sst(m, n, lam);
                CHECK(static_cast<long>(all.size()) == count_sst(m, n, lam.parts));
                CHECK(std::set<HookTableau>(all.begin(), all.end()).size() == all.size());
            }
    CHECK(enumerate_sst(2, 2, hook_partition({3, 2, 1}, 2, 2)).size() == 64);
}

TEST_CASE("operators on the b_{2|3} example tableau") {
    HookCrystal H(2, 3);
    auto T = tableau_from_rows({{1, 1, 1, 2, 2}, {2, 2, 3}, {3, 4, 5}, {4, 5}, {4, 5}}, 2, 3);
    CHECK(column_word(T) == LetterWord{2, 2, 1, 3, 5, 1, 2, 4, 5, 5, 1, 2, 3, 4, 4});
    CHECK(H.f(1, T)->to_string() == "1 1 2 2 2/2 2 3/3 4 5/4 5/4 5");
    CHECK(H.eps_phi(1, T) == std::pair{2, 1});
    CHECK(H.eps_phi(2, T) == std::pair{0, 1});
    CHECK(!H.f(4, T));
}

TEST_CASE("tableau crystal axioms") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
            HookCrystal H(m, n);
            for (const auto& lam : hook_partitions(m, n, 4))
                for (const auto& t : enumerate_sst(m, n, lam))
                    for (int i = 1; i < m + n; ++i) {
                        auto w = column_word(t);
                        CHECK(H.eps_phi(i, w) == H.string_lengths(i, w));
                        if (auto s = H.f(i, t)) {
                            CHECK(is_semistandard(*s, m, n));
                            CHECK(H.e(i, *s) == t);
                            if (i == m) CHECK(!H.f(i, *s));
                        }
                        if (i != m) {
                            auto [eps, phi] = H.eps_phi(i, t);
                            Weight wt = H.weight(t);
                            CHECK(phi - eps == wt[static_cast<std::size_t>(i - 1)] - wt[static_cast<std::size_t>(i)]);
                        }
                    }
        }
}

TEST_CASE("a tableau crystal can have sources besides H_lambda") {
    HookCrystal H(1, 2);
    auto lam = hook_partition({2, 1}, 1, 2);
    auto fake = tableau_from_rows({{1, 3}, {2}}, 1, 2);
    for (int i = 1; i < 3; ++i) CHECK(!H.e(i, fake));
    CHECK(!(fake == genuine_hw(1, 2, lam)));
}
