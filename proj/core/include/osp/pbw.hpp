#pragma once

#include "osp/roots.hpp"
#include "osp/scalar.hpp"
#include "osp/shuffle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace osp {

// Normalisation of the root-vector recursion for a non-isotropic odd short root:
// ordinary quantum integers, or the {k} variant.
enum class BracketConvention { standard, odd_braces };

// Exponent vector over the radical roots in PBW order, one char per root.
using Monomial = std::string;
// Scalar combination of ordered PBW monomials (plain powers f_beta^c). This is the
// same container type as ShuffleVec, so add_to(AlgElement&, Monomial, Scalar) is shared.
using AlgElement = std::map<Monomial, Scalar>;
// Scalar combination of words in the generators f_i.
using FreeElement = std::map<std::vector<int>, Scalar>;

void add_to(AlgElement& acc, const AlgElement& x, const Scalar& c);
AlgElement scale(const AlgElement& x, const Scalar& c);
void add_to(FreeElement& acc, const std::vector<int>& w, const Scalar& c);

struct RootVectorInfo {
    int beta1 = -1;  // indices into RootSystem::all_roots(); -1 for a simple root
    int beta2 = -1;
    int r = 0;
    Scalar coeff{1};  // prefactor of the bracket
};

// A product of radical root vectors with a scalar, e.g. one term of a commutator table.
struct RootProduct {
    Scalar c{1};
    std::vector<int> roots;  // radical indices, left to right
};

enum class Op { e, f };

class PBWAlgebra {
public:
    explicit PBWAlgebra(const AlgebraType& g, BracketConvention conv = BracketConvention::standard);

    const RootSystem& roots() const { return rs_; }
    const AlgebraType& type() const { return rs_.type(); }
    BracketConvention convention() const { return conv_; }
    int n_rad() const { return rs_.n_rad(); }

    // root vectors
    const RootVectorInfo& rv_info(int all_index) const { return rv_[static_cast<std::size_t>(all_index)]; }
    FreeElement root_vector(int all_index) const;
    // shuffle image by the recursion (independent of the closed forms)
    const ScaledVec& psi_root(int all_index) const;
    // closed-form image, rescaled for the active bracket convention
    const ScaledVec& psi_rad(int rad_index) const;
    const WordTrie& rad_trie(int rad_index) const;
    const WordTrie& letter_trie(int i) const;
    // ratio between root vectors of the active convention and the standard one
    Scalar convention_scale(int all_index) const;
    Weight unit_delta(int a) const;
    int rad_to_all(int rad_index) const { return rad_all_[static_cast<std::size_t>(rad_index)]; }

    // monomials
    Monomial unit() const { return Monomial(static_cast<std::size_t>(n_rad()), '\0'); }
    Monomial monomial(const std::map<std::pair<int, int>, int>& exps) const;
    Weight weight(const Monomial& mono) const;  // -sum c_beta beta
    int degree(const Monomial& mono) const;
    std::vector<int> root_sequence(const Monomial& mono) const;
    std::string monomial_string(const Monomial& mono) const;
    Word lead_word(const Monomial& mono) const;
    bool is_isotropic(int rad_index) const;

    // q-commutator [f_beta, f_alpha]_q for alpha < beta from the closed tables
    std::vector<RootProduct> commutator_table(int alpha, int beta) const;

    // straightening
    AlgElement mul_root(const Monomial& mono, int beta) const;
    AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
    AlgElement straighten(const std::vector<int>& roots) const;
    AlgElement from_product(const RootProduct& p) const;

    // divided powers and the lattice basis F^(c)
    Scalar divided_factor(int rad_index, int k) const;   // f^(k) = f^k * factor
    Scalar lattice_factor(int rad_index, int k) const;   // F^(k) = f^k * factor
    Scalar lattice_norm(const Monomial& mono) const;     // F^(c) = f^c * norm
    AlgElement divided_monomial(const Monomial& mono) const;

    // weights and quantum adjoint action on N
    QPow k_action(const Weight& mu, const Monomial& mono) const;  // k_mu . f^c = q(mu, wt) f^c
    std::vector<RootProduct> adjoint_table(Op op, int i, int beta) const;
    AlgElement adjoint(Op op, int i, const AlgElement& u) const;
    AlgElement adjoint_k(const Weight& mu, const AlgElement& u) const;
    // e'_i via the twisted Leibniz rule; e'_i(f_beta) is taken from the shuffle side
    AlgElement eprime(int i, const AlgElement& u) const;
    // Psi image of an element, expanded (small degrees only)
    ShuffleVec psi(const AlgElement& u) const;
    ScaledVec psi_monomial(const Monomial& mono) const;

    // omega substitution helpers
    static AlgElement map_scalars_omega(const AlgElement& x);

private:
    RootSystem rs_;
    BracketConvention conv_;
    std::vector<RootVectorInfo> rv_;
    std::vector<int> rad_all_;
    mutable std::vector<std::unique_ptr<ScaledVec>> psi_cache_;
    mutable std::vector<std::unique_ptr<WordTrie>> trie_cache_;
    mutable std::map<int, std::unique_ptr<WordTrie>> letter_tries_;
    mutable std::map<int, ScaledVec> psi_rec_;
    mutable std::recursive_mutex mu_;
    mutable std::unordered_map<std::string, AlgElement> mul_memo_;
    mutable std::unordered_map<int, AlgElement> eprime_root_memo_;

    void build_root_vectors();
    AlgElement mul_root_impl(const Monomial& mono, int beta, int depth) const;
    AlgElement eprime_root(int i, int beta) const;
};

// A weight space of N with the leading-word coordinates of its PBW monomials.
class WeightSpace {
public:
    WeightSpace(const PBWAlgebra& A, const Weight& wt);

    const Weight& weight() const { return wt_; }
    const std::vector<Monomial>& monomials() const { return monos_; }
    const std::vector<Word>& lead_words() const { return lead_; }
    std::size_t dim() const { return monos_.size(); }
    int index_of(const Monomial& mono) const;
    bool triangular() const { return triangular_; }
    // true when the leading-word matrix is singular (the monomials are dependent)
    bool rank_deficient() const { return rank_deficient_; }

    // values at the leading words of a product of root vectors (Psi side)
    std::vector<Scalar> eval_product(const std::vector<int>& roots, const Scalar& c = Scalar(1)) const;
    // values for a generic ordered list of tries with prefactor
    std::vector<Scalar> eval_tries(const std::vector<const WordTrie*>& tries, const Scalar& c) const;
    // values of an algebra element
    std::vector<Scalar> eval(const AlgElement& x) const;
    // PBW coordinates from leading-word values
    AlgElement solve(const std::vector<Scalar>& values) const;

private:
    const PBWAlgebra& A_;
    Weight wt_;
    std::vector<Monomial> monos_;
    std::vector<Word> lead_;
    std::vector<Scalar> pref_;
    std::vector<std::vector<Scalar>> mat_;  // mat_[row][col] for monomial row at lead word col
    bool triangular_ = true;
    bool rank_deficient_ = false;
    std::vector<std::vector<Scalar>> inv_;  // used when not triangular
};

// all ordered monomials of N with the given weight
std::vector<Monomial> monomials_of_weight(const PBWAlgebra& A, const Weight& wt);
// all ordered monomials with degree <= D
std::vector<Monomial> monomials_up_to_degree(const PBWAlgebra& A, int D);

}  // namespace osp
