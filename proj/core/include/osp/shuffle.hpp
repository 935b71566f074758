#pragma once

#include "osp/laurent.hpp"
#include "osp/roots.hpp"
#include "osp/scalar.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace osp {

// Homogeneous linear combination of words with integral Laurent coefficients.
using LaurentVec = std::unordered_map<Word, Laurent>;
// Linear combination of words over Q(q), ordered for deterministic output.
using ShuffleVec = std::map<Word, Scalar>;

// s * v, the usual shape of shuffle images: a Q(q) prefactor times an integral vector.
struct ScaledVec {
    Scalar s{1};
    LaurentVec v;
    ShuffleVec expand() const;
    bool is_zero() const { return s.is_zero() || v.empty(); }
};

void add_to(LaurentVec& acc, const Word& w, const Laurent& c);
void add_to(LaurentVec& acc, const LaurentVec& v, const QPow& p = QPow{});
void add_to(ShuffleVec& acc, const Word& w, const Scalar& c);

// quantum shuffle of two words, accumulated into acc with multiplier c
void shuffle_words(const RootSystem& rs, const Word& u, const Word& v, const Laurent& c, LaurentVec& acc);
LaurentVec shuffle(const RootSystem& rs, const LaurentVec& a, const LaurentVec& b);
ShuffleVec shuffle(const RootSystem& rs, const ShuffleVec& a, const ShuffleVec& b);
ScaledVec shuffle(const RootSystem& rs, const ScaledVec& a, const ScaledVec& b);
// a * b - c * b * a with c = q(|a|,|b|)^{-1}, homogeneous inputs of the given weights
ScaledVec shuffle_bracket(const RootSystem& rs, const ScaledVec& a, const Weight& wa, const ScaledVec& b,
                          const Weight& wb);

// Psi on a single generator word f_{i_1} ... f_{i_k}
ShuffleVec psi_word(const RootSystem& rs, const std::vector<int>& gens);

// closed-form shuffle image of the root vector of a radical root (i,j)
ScaledVec psi_image(const RootSystem& rs, int i, int j);
// a_k and b_k products used by the closed forms
Scalar a_coeff(const RootSystem& rs, int k);
Scalar b_coeff(const RootSystem& rs, int k);

// lexicographically largest word with nonzero coefficient
Word max_word(const LaurentVec& v);

// Prefix tree of a homogeneous vector, with the twist factors needed by the
// single-coefficient evaluator below.
class WordTrie {
public:
    WordTrie(const RootSystem& rs, const LaurentVec& v);
    int child(int node, int letter) const { return child_[static_cast<std::size_t>(node * alpha_ + letter)]; }
    const Laurent& value(int node) const { return value_[static_cast<std::size_t>(node)]; }
    // q(|prefix(node)|, alpha_letter)^{-1}
    const QPow& twist(int node, int letter) const { return twist_[static_cast<std::size_t>(node * alpha_ + letter)]; }
    int length() const { return len_; }
    bool empty() const { return empty_; }

private:
    int alpha_;
    int len_ = 0;
    bool empty_ = true;
    std::vector<int> child_;
    std::vector<Laurent> value_;
    std::vector<QPow> twist_;
};

// Coefficients of a fixed list of words in the ordered shuffle product t_1 * ... * t_k.
std::vector<Laurent> product_coefficients(const RootSystem& rs, const std::vector<const WordTrie*>& factors,
                                          const std::vector<Word>& words);

}  // namespace osp
