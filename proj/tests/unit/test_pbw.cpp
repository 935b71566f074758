#include "osp/pbw.hpp"
#include "osp/verify.hpp"

#include <doctest.h>

using namespace osp;

TEST_CASE("quantum shuffle is associative") {
    RootSystem rs(AlgebraType::parse("b", 2, 2));
    auto letter = [](int a) { return ShuffleVec{{make_word({a}), Scalar(1)}}; };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                ShuffleVec l = shuffle(rs, shuffle(rs, letter(a), letter(b)), letter(c));
                ShuffleVec r = shuffle(rs, letter(a), shuffle(rs, letter(b), letter(c)));
                CHECK(l == r);
            }
}

TEST_CASE("Psi of a generator word is the iterated shuffle") {
    RootSystem rs(AlgebraType::parse("c", 2, 2));
    ShuffleVec one = psi_word(rs, {1});
    CHECK(one == ShuffleVec{{make_word({1}), Scalar(1)}});
    ShuffleVec two = psi_word(rs, {0, 1});
    CHECK(two == shuffle(rs, psi_word(rs, {0}), psi_word(rs, {1})));
}

TEST_CASE("closed root-vector images agree with the recursion") {
    for (const char* f : {"b", "c", "d"}) {
        PBWAlgebra A(AlgebraType::parse(f, 2, 2));
        for (int k = 0; k < A.n_rad(); ++k) {
            const Root& r = A.roots().rad(k);
            CHECK(A.psi_rad(k).expand() == A.psi_root(A.rad_to_all(k)).expand());
            CHECK(!A.psi_rad(k).is_zero());
            CHECK(max_word(A.psi_rad(k).v) == r.word);
        }
    }
}

TEST_CASE("commutator tables") {
    for (const char* f : {"b", "c", "d"}) {
        PBWAlgebra A(AlgebraType::parse(f, 2, 2));
        Report r = verify_commutators(A);
        std::size_t n = static_cast<std::size_t>(A.n_rad());
        CHECK(r.checks.size() == n * (n - 1) / 2);
        CHECK(r.ok());
    }
}

TEST_CASE("tables in the odd-brace convention") {
    for (const char* f : {"b", "c", "d"}) {
        PBWAlgebra A(AlgebraType::parse(f, 2, 3), BracketConvention::odd_braces);
        CHECK(verify_commutators(A).ok());
        CHECK(verify_adjoint(A).ok());
    }
    PBWAlgebra B(AlgebraType::parse("b", 2, 2), BracketConvention::odd_braces);
    CHECK(verify_pbw(B, 4, 6).ok());
}

TEST_CASE("adjoint action tables") {
    for (const char* f : {"b", "c", "d"}) {
        Report r = verify_adjoint(PBWAlgebra(AlgebraType::parse(f, 2, 2)));
        CHECK(r.checks.size() > 0);
        CHECK(r.ok());
    }
}

TEST_CASE("straightening reproduces a single ordered monomial") {
    PBWAlgebra A(AlgebraType::parse("b", 2, 2));
    AlgElement x = A.straighten({0, 0, 3});
    Monomial mono = A.unit();
    mono[0] = 2;
    mono[3] = 1;
    CHECK(x.size() == 1);
    CHECK(x.begin()->first == mono);
    CHECK(x.begin()->second == Scalar(1));
}

TEST_CASE("PBW monomials are independent in low degree") {
    Report r = verify_pbw(PBWAlgebra(AlgebraType::parse("d", 2, 2)), 4, 6);
    CHECK(r.ok());
}

TEST_CASE("omega duality on random products") {
    Report r = verify_omega(2, 2, 10, 3, 5);
    CHECK(r.checks.size() >= 10);
    CHECK(r.ok());
}
