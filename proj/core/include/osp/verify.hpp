#pragma once

#include "osp/pbw.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace osp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string method;
    std::string detail;
};

struct Report {
    std::string suite;
    std::string algebra;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }
    void add(CheckResult r) { checks.push_back(std::move(r)); }
};

// [f_beta, f_alpha]_q for all alpha < beta, table value against the shuffle side
Report verify_commutators(const PBWAlgebra& A);
// one pair, by radical indices
CheckResult verify_commutator_pair(const PBWAlgebra& A, int alpha, int beta);

// e_i . f_beta and f_i . f_beta against the tables, for all i in I\{0}
Report verify_adjoint(const PBWAlgebra& A);

// linear independence of ordered monomials per weight up to degree D, and
// agreement of the recursive root vectors with the closed shuffle images up to height H
Report verify_pbw(const PBWAlgebra& A, int max_degree, int max_height = 8);

// the anti-isomorphism between N(c_{m|n}) and N(d_{n|m}) on random products
Report verify_omega(int m, int n, int samples, int max_degree, std::uint64_t seed);

// image of an element of N(c_{m|n}) in N(d_{n|m}) (or back), straightened on the target side
AlgElement omega_map(const PBWAlgebra& from, const PBWAlgebra& to, const AlgElement& x);

}  // namespace osp
