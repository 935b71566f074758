#pragma once

#include "osp/roots.hpp"
#include "osp/signature.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace osp {

// Exponent array c over the radical roots, indexed by RootSystem::radical() (the PBW order).
struct RadArray {
    std::vector<int> c;

    friend bool operator==(const RadArray& a, const RadArray& b) { return a.c == b.c; }
    friend bool operator<(const RadArray& a, const RadArray& b) { return a.c < b.c; }
};

// Local crystals attached to a direction i.
//   pair: F_(k,i) F_(k,i+1) or F_(i,l) F_(i+1,l), a -> a-1, b -> b+1
//   delta_*: F_(i,i) F_(i,i+1) F_(i+1,i+1) with the closed tables for each family and regime
//   trivial: only (i,i+1) is present
enum class LocalKind {
    pair,
    delta_b_lower,
    delta_b_upper,
    delta_b_odd,
    delta_c_lower,
    delta_c_odd,
    delta_d_upper,
    delta_d_odd,
    trivial
};
const char* local_kind_name(LocalKind k);

struct LocalFactor {
    LocalKind kind = LocalKind::pair;
    std::array<int, 3> roots{-1, -1, -1};  // radical indices, -1 for an absent slot
};

using LocalState = std::array<int, 3>;

class RadCrystal {
public:
    explicit RadCrystal(const AlgebraType& g);

    const RootSystem& roots() const { return rs_; }
    const AlgebraType& type() const { return rs_.type(); }
    int n_rad() const { return rs_.n_rad(); }
    int alpha0_index() const { return alpha0_; }
    Regime regime(int i) const;

    RadArray zero() const { return RadArray{std::vector<int>(static_cast<std::size_t>(n_rad()), 0)}; }
    RadArray from_pairs(const std::map<std::pair<int, int>, int>& entries) const;
    bool valid(const RadArray& x) const;
    Weight weight(const RadArray& x) const;  // -sum c_beta beta
    int degree(const RadArray& x) const;     // sum c_beta ht(beta)
    std::string to_string(const RadArray& x) const;
    int at(const RadArray& x, int i, int j) const;

    // factors of N(i) in the order N_1(i), ..., N_{i-1}(i), N_Delta(i), N^{i+2}(i), ..., N^{m+n}(i)
    const std::vector<LocalFactor>& factors(int i) const;
    // radical indices touched by direction i
    std::vector<int> support(int i) const;

    std::optional<LocalState> local_f(const LocalFactor& fac, const LocalState& s) const;
    std::optional<LocalState> local_e(const LocalFactor& fac, const LocalState& s) const;
    std::pair<int, int> local_eps_phi(const LocalFactor& fac, const LocalState& s) const;
    bool local_valid(const LocalFactor& fac, const LocalState& s) const;

    // i in I = {0, ..., m+n-1}; i = 0 moves the alpha_0 exponent
    std::optional<RadArray> f(int i, const RadArray& x) const;
    std::optional<RadArray> e(int i, const RadArray& x) const;
    // (eps_i, phi_i); phi_0 is unbounded and reported as -1. Off the odd direction the counts
    // come from the reduced signature, on it from the strings themselves.
    std::pair<int, int> eps_phi(int i, const RadArray& x) const;
    // the same by iterating e~_i and f~_i
    std::pair<int, int> string_lengths(int i, const RadArray& x) const;

    // all arrays of degree <= D, sorted by (degree, c)
    std::vector<RadArray> enumerate(int max_degree) const;

private:
    RootSystem rs_;
    int alpha0_ = -1;
    std::vector<std::vector<LocalFactor>> factors_;  // indexed by i
    std::vector<int> ht_;
    std::vector<bool> iso_;

    LocalState read(const LocalFactor& fac, const RadArray& x) const;
    void write(const LocalFactor& fac, const LocalState& s, RadArray& x) const;
    std::optional<RadArray> act(int i, const RadArray& x, bool raise) const;
};

}  // namespace osp
