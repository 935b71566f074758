#include "osp/scalar.hpp"

#include <doctest.h>

#include <random>

using osp::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-3, 3), len(1, 3);
    auto laurent = [&] {
        std::vector<std::pair<int, long>> t;
        for (int k = len(rng); k > 0; --k) t.emplace_back(exp(rng), coeff(rng));
        return Scalar::laurent(t);
    };
    Scalar den = laurent();
    if (den.is_zero()) den = Scalar(1);
    return laurent() / den;
}

}  // namespace

TEST_CASE("scalar rendering") {
    CHECK((Scalar::q_pow(-2) - Scalar::q_pow(2)).to_string() == "q^-2 - q^2");
    CHECK(osp::q_int(3).to_string() == "q^-2 + 1 + q^2");
    CHECK(Scalar(0).to_string() == "0");
}

TEST_CASE("scalar canonical form makes equality structural") {
    Scalar a = (Scalar(1) - Scalar::q_pow(2)) / (Scalar(1) - Scalar::q());
    CHECK(a == Scalar(1) + Scalar::q());
    CHECK(a.is_laurent());
    Scalar b = Scalar(2) / (Scalar(4) + Scalar::q_pow(1, 2));
    CHECK(b == Scalar(1) / (Scalar(2) + Scalar::q()));
}

TEST_CASE("quantum integers") {
    Scalar q = Scalar::q();
    CHECK(osp::q_int(2) == q + q.inv());
    CHECK(osp::q_int(2, 2) == Scalar::q_pow(2) + Scalar::q_pow(-2));
    CHECK(osp::q_int_fact(3) == osp::q_int(3) * osp::q_int(2));
    CHECK(osp::q_int(0).is_zero());
}

TEST_CASE("valuation and mod q") {
    Scalar x = Scalar::q_pow(3) * (Scalar(2) + Scalar::q()) / (Scalar(1) - Scalar::q_pow(2));
    CHECK(x.valuation() == 3);
    CHECK(!Scalar(0).valuation().has_value());
    Scalar y = (Scalar(3) + Scalar::q()) / (Scalar(2) - Scalar::q());
    CHECK(y.in_A0());
    CHECK(y.mod_q() == mpq_class(3, 2));
    CHECK(!Scalar::q_pow(-1).in_A0());
}

TEST_CASE("valuation is a discrete valuation on random scalars") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*(a * b).valuation() == *a.valuation() + *b.valuation());
        Scalar s = a + b;
        if (!s.is_zero()) CHECK(*s.valuation() >= std::min(*a.valuation(), *b.valuation()));
    }
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a.bar().bar() == a);
    }
}

TEST_CASE("Laurent term round trip") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::from_terms(a.num_terms(), a.den_terms()) == a);
    }
}
