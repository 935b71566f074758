#pragma once

#include "osp/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace osp {

enum class Family { b, c, d };

struct AlgebraType {
    Family family = Family::b;
    int m = 2;
    int n = 1;

    int N() const { return m + n; }
    int r() const { return family == Family::b ? 2 : 1; }
    bool odd_index(int a) const { return a > m; }  // a in 1..N
    std::string name() const;
    static AlgebraType parse(const std::string& family, int m, int n);
    void validate() const;
};

char family_char(Family f);

// coordinates in the delta basis, entry a-1 for delta_a
using Weight = std::vector<int>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(int k, const Weight& a);
bool is_zero(const Weight& w);

// letters are 0..N-1 stored as char values
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
std::string word_to_string(const Word& w);
bool is_lyndon(const Word& w);

enum class Parity { even, isotropic, nonisotropic_odd };
const char* parity_name(Parity p);

struct Root {
    int i = 0;  // pair encoding for roots outside the Levi part, 0 otherwise
    int j = 0;
    bool radical = false;
    Weight weight;              // the root itself, e.g. (i,j) -> -delta_i - delta_j
    std::vector<int> coeffs;    // multiplicities of alpha_0..alpha_{N-1}
    int ht = 0;
    int norm = 0;               // (beta|beta)
    Parity parity = Parity::even;
    Word word;                  // good Lyndon word
};

class RootSystem {
public:
    explicit RootSystem(const AlgebraType& g);

    const AlgebraType& type() const { return g_; }
    int N() const { return g_.N(); }
    int rank() const { return g_.N(); }  // number of simple roots alpha_0..alpha_{N-1}

    const std::vector<Weight>& simple_roots() const { return simple_; }
    int bilinear(const Weight& a, const Weight& b) const;
    QPow q_factor(const Weight& a, const Weight& b) const;
    // q(alpha_a, alpha_b) for letters
    const QPow& q_letter(int a, int b) const { return qlet_[static_cast<std::size_t>(a * N() + b)]; }
    // exponent d with q_i = q^d
    int qi_exp(int i) const;
    // base exponent used for [k]_beta and divided powers of a root
    int root_qexp(const Weight& beta) const;
    // letter k of the simple roots with (alpha_k|alpha_k) matching beta, or -1
    int matching_simple(const Weight& beta) const;

    const std::vector<Root>& all_roots() const { return all_; }     // sorted by Lyndon word
    const std::vector<Root>& radical() const { return rad_; }       // sorted by the PBW order
    int n_rad() const { return static_cast<int>(rad_.size()); }
    const Root& rad(int k) const { return rad_[static_cast<std::size_t>(k)]; }
    // position in radical() of the pair (i,j), or -1
    int rad_index(int i, int j) const;
    // index into all_roots() of a Lyndon word, or -1
    int word_index(const Word& w) const;
    int weight_index(const Weight& w) const;  // index into all_roots(), or -1

    Weight weight_of_word(const Word& w) const;
    const Word& lyndon_word(int i, int j) const;
    bool is_root(const Weight& w) const;   // reduced roots, either sign
    bool is_root_or_double(const Weight& w) const;  // also 2*delta_a for odd a in type b
    // simple-root coordinates of a weight scaled by 2 (so that every family is integral)
    std::vector<int> simple_coords2(const Weight& w) const;
    int height2(const Weight& w) const;  // 2 * ht

private:
    AlgebraType g_;
    std::vector<Weight> simple_;
    std::vector<QPow> qlet_;
    std::vector<Root> all_;
    std::vector<Root> rad_;
    std::map<std::pair<int, int>, int> pair_index_;
    std::map<Word, int> word_index_;
    std::map<Weight, int> weight_index_;
    void build_words();
};

}  // namespace osp
