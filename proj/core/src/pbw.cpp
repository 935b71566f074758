#include "osp/pbw.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace osp {

void add_to(AlgElement& acc, const AlgElement& x, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m, v] : x) add_to(acc, m, v * c);
}

AlgElement scale(const AlgElement& x, const Scalar& c) {
    AlgElement r;
    add_to(r, x, c);
    return r;
}

void add_to(FreeElement& acc, const std::vector<int>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

namespace {

Scalar qq_plus_inv() { return Scalar::q() + Scalar::q_pow(-1); }

// the bracket normaliser [k] or {k} in base q^d
Scalar bracket_int(int k, int d, bool odd_braces) { return odd_braces ? q_odd_int(k, d) : q_int(k, d); }

}  // namespace

PBWAlgebra::PBWAlgebra(const AlgebraType& g, BracketConvention conv) : rs_(g), conv_(conv) {
    build_root_vectors();
    for (int k = 0; k < rs_.n_rad(); ++k) rad_all_.push_back(rs_.word_index(rs_.rad(k).word));
    psi_cache_.resize(static_cast<std::size_t>(rs_.n_rad()));
    trie_cache_.resize(static_cast<std::size_t>(rs_.n_rad()));
}

void PBWAlgebra::build_root_vectors() {
    const auto& all = rs_.all_roots();
    rv_.assign(all.size(), RootVectorInfo{});
    const bool odd_braces = conv_ == BracketConvention::odd_braces;
    for (std::size_t b = 0; b < all.size(); ++b) {
        const Root& beta = all[b];
        if (beta.ht == 1) continue;
        // maximal concatenation l(g1)l(g2) over g1 + g2 = beta with l(g1) < l(g2), then maximal l(g1)
        int best1 = -1, best2 = -1;
        Word best;
        for (std::size_t x = 0; x < all.size(); ++x) {
            Weight rest = beta.weight - all[x].weight;
            int y = rs_.weight_index(rest);
            if (y < 0) continue;
            const Word& w1 = all[x].word;
            const Word& w2 = all[static_cast<std::size_t>(y)].word;
            if (!(w1 < w2)) continue;
            Word cat = w1 + w2;
            if (best1 < 0 || best < cat || (cat == best && all[static_cast<std::size_t>(best1)].word < w1)) {
                best = cat;
                best1 = static_cast<int>(x);
                best2 = y;
            }
        }
        if (best1 < 0 || best != beta.word)
            throw std::logic_error("root vector factorisation does not reproduce the Lyndon word " +
                                   word_to_string(beta.word));
        RootVectorInfo& info = rv_[b];
        info.beta1 = best1;
        info.beta2 = best2;
        const Root& r1 = all[static_cast<std::size_t>(best1)];
        const Root& r2 = all[static_cast<std::size_t>(best2)];
        int r = 0;
        for (int p = 1; p <= 4; ++p)
            if (rs_.is_root(r1.weight - p * r2.weight)) r = p;
        info.r = r;
        const Root& rs = r1.norm <= r2.norm ? r1 : r2;
        int d = rs_.root_qexp(rs.weight);
        bool braces = odd_braces && rs.parity == Parity::nonisotropic_odd;
        int k = r + 1;
        // type d: f_{-2delta_{u+1}} = [f_u, f_{-delta_u-delta_{u+1}}] / [2] also for u = m
        if (rs_.type().family == Family::d && beta.radical && beta.i == beta.j) {
            k = 2;
            d = 1;
            braces = false;
        }
        info.coeff = bracket_int(k, d, braces).inv();
    }
}

FreeElement PBWAlgebra::root_vector(int all_index) const {
    const Root& beta = rs_.all_roots()[static_cast<std::size_t>(all_index)];
    FreeElement r;
    if (beta.ht == 1) {
        r.emplace(std::vector<int>{static_cast<int>(beta.word[0])}, Scalar(1));
        return r;
    }
    const RootVectorInfo& info = rv_info(all_index);
    FreeElement x1 = root_vector(info.beta1);
    FreeElement x2 = root_vector(info.beta2);
    const auto& all = rs_.all_roots();
    Scalar c = Scalar(rs_.q_factor(all[static_cast<std::size_t>(info.beta1)].weight,
                                   all[static_cast<std::size_t>(info.beta2)].weight)
                          .inv());
    for (const auto& [w2, c2] : x2)
        for (const auto& [w1, c1] : x1) {
            std::vector<int> w = w2;
            w.insert(w.end(), w1.begin(), w1.end());
            add_to(r, w, info.coeff * c2 * c1);
            std::vector<int> v = w1;
            v.insert(v.end(), w2.begin(), w2.end());
            add_to(r, v, -(info.coeff * c * c1 * c2));
        }
    return r;
}

const ScaledVec& PBWAlgebra::psi_root(int all_index) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = psi_rec_.find(all_index);
    if (it != psi_rec_.end()) return it->second;
    const Root& beta = rs_.all_roots()[static_cast<std::size_t>(all_index)];
    ScaledVec v;
    if (beta.ht == 1) {
        v.v.emplace(beta.word, Laurent(1));
    } else {
        const RootVectorInfo& info = rv_info(all_index);
        const auto& all = rs_.all_roots();
        const ScaledVec& a = psi_root(info.beta2);
        const ScaledVec& b = psi_root(info.beta1);
        v = shuffle_bracket(rs_, a, all[static_cast<std::size_t>(info.beta2)].weight, b,
                            all[static_cast<std::size_t>(info.beta1)].weight);
        v.s *= info.coeff;
    }
    return psi_rec_.emplace(all_index, std::move(v)).first->second;
}

Scalar PBWAlgebra::convention_scale(int all_index) const {
    if (conv_ == BracketConvention::standard) return Scalar(1);
    const Root& beta = rs_.all_roots()[static_cast<std::size_t>(all_index)];
    if (beta.ht == 1) return Scalar(1);
    const RootVectorInfo& info = rv_info(all_index);
    const auto& all = rs_.all_roots();
    const Root& r1 = all[static_cast<std::size_t>(info.beta1)];
    const Root& r2 = all[static_cast<std::size_t>(info.beta2)];
    const Root& rs = r1.norm <= r2.norm ? r1 : r2;
    Scalar s = convention_scale(info.beta1) * convention_scale(info.beta2);
    bool exception = rs_.type().family == Family::d && beta.radical && beta.i == beta.j;
    if (!exception && rs.parity == Parity::nonisotropic_odd) {
        int d = rs_.root_qexp(rs.weight);
        s *= q_int(info.r + 1, d) / q_odd_int(info.r + 1, d);
    }
    return s;
}

const ScaledVec& PBWAlgebra::psi_rad(int rad_index) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = psi_cache_[static_cast<std::size_t>(rad_index)];
    if (!slot) {
        const Root& beta = rs_.rad(rad_index);
        ScaledVec v = psi_image(rs_, beta.i, beta.j);
        v.s *= convention_scale(rad_to_all(rad_index));
        slot = std::make_unique<ScaledVec>(std::move(v));
    }
    return *slot;
}

const WordTrie& PBWAlgebra::rad_trie(int rad_index) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = trie_cache_[static_cast<std::size_t>(rad_index)];
    if (!slot) slot = std::make_unique<WordTrie>(rs_, psi_rad(rad_index).v);
    return *slot;
}

const WordTrie& PBWAlgebra::letter_trie(int i) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = letter_tries_.find(i);
    if (it != letter_tries_.end()) return *it->second;
    LaurentVec v;
    v.emplace(Word(1, static_cast<char>(i)), Laurent(1));
    return *letter_tries_.emplace(i, std::make_unique<WordTrie>(rs_, v)).first->second;
}

Monomial PBWAlgebra::monomial(const std::map<std::pair<int, int>, int>& exps) const {
    Monomial m = unit();
    for (const auto& [pr, e] : exps) {
        int k = rs_.rad_index(pr.first, pr.second);
        if (k < 0) throw std::invalid_argument("monomial: (" + std::to_string(pr.first) + "," +
                                               std::to_string(pr.second) + ") is not a radical root");
        if (e < 0 || e > 120) throw std::invalid_argument("monomial: exponent out of range");
        if (e > 1 && is_isotropic(k)) throw std::invalid_argument("monomial: isotropic exponent above 1");
        m[static_cast<std::size_t>(k)] = static_cast<char>(e);
    }
    return m;
}

Weight PBWAlgebra::weight(const Monomial& mono) const {
    Weight w(static_cast<std::size_t>(rs_.N()), 0);
    for (int k = 0; k < n_rad(); ++k) {
        int e = mono[static_cast<std::size_t>(k)];
        if (e) w = w - e * rs_.rad(k).weight;
    }
    return w;
}

int PBWAlgebra::degree(const Monomial& mono) const {
    int d = 0;
    for (int k = 0; k < n_rad(); ++k) d += mono[static_cast<std::size_t>(k)] * rs_.rad(k).ht;
    return d;
}

std::vector<int> PBWAlgebra::root_sequence(const Monomial& mono) const {
    std::vector<int> r;
    for (int k = 0; k < n_rad(); ++k)
        for (int e = 0; e < mono[static_cast<std::size_t>(k)]; ++e) r.push_back(k);
    return r;
}

std::string PBWAlgebra::monomial_string(const Monomial& mono) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < n_rad(); ++k) {
        int e = mono[static_cast<std::size_t>(k)];
        if (!e) continue;
        if (!first) os << " ";
        first = false;
        os << "f(" << rs_.rad(k).i << "," << rs_.rad(k).j << ")";
        if (e > 1) os << "^" << e;
    }
    if (first) os << "1";
    return os.str();
}

Word PBWAlgebra::lead_word(const Monomial& mono) const {
    Word w;
    for (int k = n_rad() - 1; k >= 0; --k)
        for (int e = 0; e < mono[static_cast<std::size_t>(k)]; ++e) w += rs_.rad(k).word;
    return w;
}

bool PBWAlgebra::is_isotropic(int rad_index) const { return rs_.rad(rad_index).parity == Parity::isotropic; }

std::vector<RootProduct> PBWAlgebra::commutator_table(int alpha, int beta) const {
    if (!(alpha < beta)) throw std::invalid_argument("commutator_table: expects alpha before beta");
    const int i1 = rs_.rad(alpha).i, j1 = rs_.rad(alpha).j;
    const int i2 = rs_.rad(beta).i, j2 = rs_.rad(beta).j;
    const int m = type().m;
    const Scalar q = Scalar::q();
    auto F = [&](int i, int j) {
        int k = rs_.rad_index(i, j);
        if (k < 0) {
            std::ostringstream os;
            os << "commutator_table: (" << i << "," << j << ") is not a radical root of " << type().name();
            throw std::logic_error(os.str());
        }
        return k;
    };
    auto L = [](std::initializer_list<std::pair<int, long>> t) { return Scalar::laurent(t); };
    std::vector<RootProduct> out;
    switch (type().family) {
        case Family::b:
            if (i1 == j1 && j1 < i2 && i2 == j2) {
                out.push_back({qq_plus_inv(), {F(i1, i2)}});
            } else if (i1 == j1 && j1 < i2 && i2 < j2) {
                out.push_back({L({{-2, 1}, {2, -1}}), {F(i1, j2), F(i2, i2)}});
            } else if (i1 < j1 && j1 < i2 && i2 == j2) {
                out.push_back({L({{-2, 1}, {2, -1}}), {F(i1, i2), F(j1, j1)}});
            } else if (i1 < i2 && i2 < j1 && j1 < j2) {
                out.push_back({L({{-2, 1}, {2, -1}}), {F(i1, j2), F(i2, j1)}});
            } else if (i1 < j1 && j1 == i2 && i2 < j2) {
                Scalar qj(rs_.q_factor(unit_delta(j1), unit_delta(j1)));
                out.push_back({(Scalar::q_pow(-1) - q) * (qj.inv() - Scalar(1)), {F(i1, j2), F(j1, j1), F(j1, j1)}});
            } else if (i1 < j1 && j1 < i2 && i2 < j2) {
                Scalar a = L({{-4, 1}, {-2, -1}, {0, -2}, {2, 1}, {4, 1}});
                Scalar b = L({{-2, 1}, {2, -1}});
                Scalar c = L({{-3, 1}, {-1, -1}, {1, -1}, {3, 1}});
                out.push_back({a, {F(i1, j2), F(j1, i2)}});
                out.push_back({b, {F(i1, i2), F(j1, j2)}});
                out.push_back({c, {F(i1, j2), F(j1, j1), F(i2, i2)}});
            }
            break;
        case Family::c:
            if (i1 == j1 && j1 < i2 && i2 == j2 && j2 <= m) {
                out.push_back({L({{-2, 1}, {0, -1}}) / qq_plus_inv(), {F(i1, i2), F(i1, i2)}});
            } else if (i1 == j1 && j1 < i2 && i2 < j2 && i1 <= m) {
                out.push_back({L({{-2, 1}, {0, -1}}), {F(i1, i2), F(j1, j2)}});
            } else if (i1 < j1 && j1 < i2 && i2 == j2 && j2 <= m) {
                out.push_back({L({{-2, 1}, {0, -1}}), {F(i1, i2), F(j1, j2)}});
            } else if (i1 < i2 && i2 < j1 && j1 < j2) {
                out.push_back({L({{-1, 1}, {1, -1}}), {F(i2, j1), F(i1, j2)}});
            } else if (i1 < j1 && j1 == i2 && i2 < j2 && j1 <= m) {
                out.push_back({L({{-2, 1}, {2, -1}}), {F(i2, j1), F(i1, j2)}});
            } else if (i1 < j1 && j1 < i2 && i2 < j2) {
                out.push_back({L({{-1, 1}, {1, -1}}), {F(i1, i2), F(j1, j2)}});
                out.push_back({L({{-2, 1}, {0, -1}}), {F(j1, i2), F(i1, j2)}});
            }
            break;
        case Family::d:
            if (m < i1 && i1 == j1 && j1 < i2 && i2 == j2) {
                out.push_back({L({{0, 1}, {2, -1}}) / qq_plus_inv(), {F(i1, i2), F(i1, i2)}});
            } else if (m < i1 && i1 == j1 && j1 < i2 && i2 < j2) {
                out.push_back({L({{0, 1}, {2, -1}}), {F(i1, i2), F(j1, j2)}});
            } else if (i1 < j1 && j1 < i2 && i2 == j2 && m < i2) {
                out.push_back({L({{0, 1}, {2, -1}}), {F(i1, i2), F(j1, j2)}});
            } else if (i1 < i2 && i2 < j1 && j1 < j2) {
                out.push_back({L({{-1, 1}, {1, -1}}), {F(i2, j1), F(i1, j2)}});
            } else if (i1 < j1 && j1 == i2 && i2 < j2 && m < j1) {
                out.push_back({L({{-2, 1}, {2, -1}}), {F(i2, j1), F(i1, j2)}});
            } else if (i1 < j1 && j1 < i2 && i2 < j2) {
                out.push_back({L({{-1, 1}, {1, -1}}), {F(i1, i2), F(j1, j2)}});
                out.push_back({L({{0, -1}, {2, 1}}), {F(j1, i2), F(i1, j2)}});
            }
            break;
    }
    if (conv_ != BracketConvention::standard) {
        // the tables hold for the standard root vectors; rescale to the active ones
        auto S = [&](int k) { return convention_scale(rad_to_all(k)); };
        Scalar outer = S(alpha) * S(beta);
        for (RootProduct& t : out) {
            Scalar inner(1);
            for (int r : t.roots) inner *= S(r);
            t.c *= outer / inner;
        }
    }
    return out;
}

Weight PBWAlgebra::unit_delta(int a) const {
    Weight w(static_cast<std::size_t>(rs_.N()), 0);
    w[static_cast<std::size_t>(a - 1)] = 1;
    return w;
}

AlgElement PBWAlgebra::mul_root(const Monomial& mono, int beta) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return mul_root_impl(mono, beta, 0);
}

AlgElement PBWAlgebra::mul_root_impl(const Monomial& mono, int beta, int depth) const {
    if (depth > 4096) throw std::logic_error("straightening did not terminate");
    int t = -1;
    for (int k = n_rad() - 1; k >= 0; --k)
        if (mono[static_cast<std::size_t>(k)]) {
            t = k;
            break;
        }
    if (t <= beta) {
        AlgElement r;
        if (t == beta && is_isotropic(beta)) return r;
        Monomial m = mono;
        m[static_cast<std::size_t>(beta)] = static_cast<char>(m[static_cast<std::size_t>(beta)] + 1);
        r.emplace(std::move(m), Scalar(1));
        return r;
    }
    std::string key = mono;
    key.push_back(static_cast<char>(beta));
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;

    Monomial rest = mono;
    rest[static_cast<std::size_t>(t)] = static_cast<char>(rest[static_cast<std::size_t>(t)] - 1);
    AlgElement out;
    // f_t f_beta = q(beta, t)^{-1} f_beta f_t + [f_t, f_beta]_q
    Scalar tw(rs_.q_factor(rs_.rad(beta).weight, rs_.rad(t).weight).inv());
    AlgElement x = mul_root_impl(rest, beta, depth + 1);
    for (const auto& [mx, cx] : x) add_to(out, mul_root_impl(mx, t, depth + 1), cx * tw);
    for (const RootProduct& term : commutator_table(beta, t)) {
        AlgElement y;
        y.emplace(rest, term.c);
        for (int r : term.roots) {
            AlgElement ny;
            for (const auto& [my, cy] : y) add_to(ny, mul_root_impl(my, r, depth + 1), cy);
            y = std::move(ny);
        }
        add_to(out, y, Scalar(1));
    }
    mul_memo_.emplace(std::move(key), out);
    return out;
}

AlgElement PBWAlgebra::multiply(const AlgElement& a, const AlgElement& b) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    AlgElement out;
    for (const auto& [mb, cb] : b) {
        std::vector<int> seq = root_sequence(mb);
        AlgElement y = a;
        for (int r : seq) {
            AlgElement ny;
            for (const auto& [my, cy] : y) add_to(ny, mul_root_impl(my, r, 0), cy);
            y = std::move(ny);
        }
        add_to(out, y, cb);
    }
    return out;
}

AlgElement PBWAlgebra::straighten(const std::vector<int>& roots) const {
    AlgElement y;
    y.emplace(unit(), Scalar(1));
    std::lock_guard<std::recursive_mutex> lock(mu_);
    for (int r : roots) {
        if (r < 0 || r >= n_rad()) throw std::invalid_argument("straighten: root index out of range");
        AlgElement ny;
        for (const auto& [my, cy] : y) add_to(ny, mul_root_impl(my, r, 0), cy);
        y = std::move(ny);
    }
    return y;
}

AlgElement PBWAlgebra::from_product(const RootProduct& p) const { return scale(straighten(p.roots), p.c); }

Scalar PBWAlgebra::divided_factor(int rad_index, int k) const {
    const Root& b = rs_.rad(rad_index);
    if (b.parity == Parity::isotropic) {
        if (k > 1) throw std::invalid_argument("divided power of an isotropic root above 1");
        return Scalar(1);
    }
    int d = rs_.root_qexp(b.weight);
    if (b.parity == Parity::nonisotropic_odd) return q_odd_int_fact(k, d).inv();
    return q_int_fact(k, d).inv();
}

Scalar PBWAlgebra::lattice_factor(int rad_index, int k) const {
    Scalar f = divided_factor(rad_index, k);
    const Root& b = rs_.rad(rad_index);
    if (b.norm >= 0) return f;
    if (b.i != b.j) return f * Scalar::q_pow(-k * (k - 1) * type().r() / 2);
    if (type().family == Family::b) return f * Scalar::q_pow(-k * (k - 1) / 2);
    if (type().family == Family::d) return f * Scalar::q_pow(-k * k);
    return f;
}

Scalar PBWAlgebra::lattice_norm(const Monomial& mono) const {
    Scalar s(1);
    for (int k = 0; k < n_rad(); ++k) {
        int e = mono[static_cast<std::size_t>(k)];
        if (e) s *= lattice_factor(k, e);
    }
    return s;
}

AlgElement PBWAlgebra::divided_monomial(const Monomial& mono) const {
    AlgElement r;
    for (int k = 0; k < n_rad(); ++k)
        if (mono[static_cast<std::size_t>(k)] > 1 && is_isotropic(k))
            throw std::invalid_argument("divided_monomial: isotropic exponent above 1");
    r.emplace(mono, lattice_norm(mono));
    return r;
}

QPow PBWAlgebra::k_action(const Weight& mu, const Monomial& mono) const { return rs_.q_factor(mu, weight(mono)); }

AlgElement PBWAlgebra::adjoint_k(const Weight& mu, const AlgElement& u) const {
    AlgElement r;
    for (const auto& [m, c] : u) add_to(r, m, c * k_action(mu, m));
    return r;
}

std::vector<RootProduct> PBWAlgebra::adjoint_table(Op op, int i, int beta) const {
    if (i <= 0 || i >= rs_.N()) throw std::invalid_argument("adjoint: not an l-direction");
    const int k = rs_.rad(beta).i, l = rs_.rad(beta).j;
    const int m = type().m;
    const Family fam = type().family;
    auto F = [&](int a, int b) {
        int x = rs_.rad_index(a, b);
        if (x < 0) {
            std::ostringstream os;
            os << "adjoint_table: (" << a << "," << b << ") is not a radical root of " << type().name();
            throw std::logic_error(os.str());
        }
        return x;
    };
    auto qq = [&](int a) { return Scalar(rs_.q_factor(unit_delta(a), unit_delta(a))); };
    std::vector<RootProduct> table = [&] {
        std::vector<RootProduct> out;
        if (fam == Family::b) {
            if (op == Op::e) {
                if (k == i + 1 && l == i + 1) out.push_back({Scalar(1), {F(i, i)}});
                else if (k < l && k == i + 1) out.push_back({Scalar(1), {F(i, l)}});
                else if (l == i + 1 && k < i) out.push_back({Scalar(1), {F(k, i)}});
                else if (k == i && l == i + 1)
                    out.push_back({(qq(i).inv() - Scalar(1)) / qq_plus_inv(), {F(i, i), F(i, i)}});
            } else {
                if (k == i && l == i) out.push_back({Scalar(1), {F(i + 1, i + 1)}});
                else if (k == i && l > i + 1) out.push_back({Scalar(1), {F(i + 1, l)}});
                else if (k < i && l == i) out.push_back({Scalar(1), {F(k, i + 1)}});
                else if (k == i && l == i + 1)
                    out.push_back({(qq(i + 1).inv() - Scalar(1)) / qq_plus_inv(), {F(i + 1, i + 1), F(i + 1, i + 1)}});
            }
            return out;
        }
        const bool is_d = fam == Family::d;
        if (op == Op::e) {
            if (k == i + 1) {
                Scalar c = (is_d && k == l) ? Scalar(-1) : Scalar(1);
                out.push_back({c, {F(i, l)}});
            } else if (l == i + 1 && k < i) {
                out.push_back({Scalar(1), {F(k, i)}});
            } else if (k == i && l == i + 1 && ((!is_d && i <= m) || (is_d && i > m))) {
                out.push_back({qq_plus_inv(), {F(i, i)}});
            }
        } else {
            if (k == i && l > i + 1) {
                out.push_back({Scalar(1), {F(i + 1, l)}});
            } else if (l == i) {
                Scalar c = (is_d && k == l) ? Scalar(-1) : Scalar(1);
                out.push_back({c, {F(k, i + 1)}});
            } else if (k == i && l == i + 1 && ((!is_d && i <= m - 1) || (is_d && i > m - 1))) {
                out.push_back({qq_plus_inv(), {F(i + 1, i + 1)}});
            }
        }
    return out;
    }();
    if (conv_ != BracketConvention::standard) {
        for (RootProduct& t : table) {
            Scalar inner(1);
            for (int r : t.roots) inner *= convention_scale(rad_to_all(r));
            t.c *= convention_scale(rad_to_all(beta)) / inner;
        }
    }
    return table;
}

AlgElement PBWAlgebra::adjoint(Op op, int i, const AlgElement& u) const {
    if (i <= 0 || i >= rs_.N()) throw std::invalid_argument("adjoint: not an l-direction");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const Weight& ai = rs_.simple_roots()[static_cast<std::size_t>(i)];
    AlgElement out;
    for (const auto& [mono, c] : u) {
        std::vector<int> seq = root_sequence(mono);
        for (std::size_t p = 0; p < seq.size(); ++p) {
            Monomial pre = unit(), suf = unit();
            for (std::size_t x = 0; x < p; ++x) pre[static_cast<std::size_t>(seq[x])]++;
            for (std::size_t x = p + 1; x < seq.size(); ++x) suf[static_cast<std::size_t>(seq[x])]++;
            Scalar coef = c;
            if (op == Op::f) coef *= Scalar(rs_.q_factor(ai, weight(pre)));
            else coef *= Scalar(rs_.q_factor(-ai, weight(suf)));
            AlgElement mid;
            for (const RootProduct& t : adjoint_table(op, i, seq[p])) add_to(mid, from_product(t), Scalar(1));
            if (mid.empty()) continue;
            AlgElement left;
            left.emplace(pre, Scalar(1));
            AlgElement right;
            right.emplace(suf, Scalar(1));
            add_to(out, multiply(multiply(left, mid), right), coef);
        }
    }
    return out;
}

AlgElement PBWAlgebra::eprime_root(int i, int beta) const {
    int key = i * 256 + beta;
    auto it = eprime_root_memo_.find(key);
    if (it != eprime_root_memo_.end()) return it->second;
    const Weight& ai = rs_.simple_roots()[static_cast<std::size_t>(i)];
    Weight target = -rs_.rad(beta).weight + ai;
    AlgElement r;
    bool nonneg = std::all_of(target.begin(), target.end(), [](int x) { return x >= 0; });
    if (nonneg && !is_zero(target)) {
        WeightSpace ws(*this, target);
        const ScaledVec& psi = psi_rad(beta);
        std::vector<Scalar> vals;
        for (const Word& w : ws.lead_words()) {
            auto f = psi.v.find(w + Word(1, static_cast<char>(i)));
            vals.push_back(f == psi.v.end() ? Scalar(0) : psi.s * f->second.to_scalar());
        }
        r = ws.solve(vals);
    } else if (is_zero(target)) {
        const ScaledVec& psi = psi_rad(beta);
        auto f = psi.v.find(Word(1, static_cast<char>(i)));
        if (f != psi.v.end()) r.emplace(unit(), psi.s * f->second.to_scalar());
    }
    eprime_root_memo_.emplace(key, r);
    return r;
}

AlgElement PBWAlgebra::eprime(int i, const AlgElement& u) const {
    if (i < 0 || i >= rs_.N()) throw std::invalid_argument("eprime: index out of range");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const Weight& ai = rs_.simple_roots()[static_cast<std::size_t>(i)];
    AlgElement out;
    for (const auto& [mono, c] : u) {
        std::vector<int> seq = root_sequence(mono);
        for (std::size_t p = 0; p < seq.size(); ++p) {
            Monomial pre = unit(), suf = unit();
            for (std::size_t x = 0; x < p; ++x) pre[static_cast<std::size_t>(seq[x])]++;
            for (std::size_t x = p + 1; x < seq.size(); ++x) suf[static_cast<std::size_t>(seq[x])]++;
            AlgElement mid = eprime_root(i, seq[p]);
            if (mid.empty()) continue;
            Scalar coef = c * Scalar(rs_.q_factor(ai, weight(pre)));
            AlgElement left;
            left.emplace(pre, Scalar(1));
            AlgElement right;
            right.emplace(suf, Scalar(1));
            add_to(out, multiply(multiply(left, mid), right), coef);
        }
    }
    return out;
}

ScaledVec PBWAlgebra::psi_monomial(const Monomial& mono) const {
    ScaledVec acc;
    acc.v.emplace(Word(), Laurent(1));
    for (int r : root_sequence(mono)) acc = shuffle(rs_, acc, psi_rad(r));
    return acc;
}

ShuffleVec PBWAlgebra::psi(const AlgElement& u) const {
    ShuffleVec out;
    for (const auto& [mono, c] : u) {
        ScaledVec v = psi_monomial(mono);
        Scalar s = c * v.s;
        for (const auto& [w, l] : v.v) add_to(out, w, s * l.to_scalar());
    }
    return out;
}

AlgElement PBWAlgebra::map_scalars_omega(const AlgElement& x) {
    AlgElement r;
    for (const auto& [m, c] : x) add_to(r, m, c.omega());
    return r;
}

// ---------------------------------------------------------------------------

std::vector<Monomial> monomials_of_weight(const PBWAlgebra& A, const Weight& wt) {
    std::vector<Monomial> out;
    const int nr = A.n_rad();
    const RootSystem& rs = A.roots();
    Monomial cur = A.unit();
    Weight rem = wt;
    std::function<void(int)> rec = [&](int k) {
        if (k == nr) {
            if (is_zero(rem)) out.push_back(cur);
            return;
        }
        Weight neg = -rs.rad(k).weight;
        int maxe = 1 << 20;
        for (std::size_t a = 0; a < neg.size(); ++a)
            if (neg[a] > 0) maxe = std::min(maxe, rem[a] / neg[a]);
        if (A.is_isotropic(k)) maxe = std::min(maxe, 1);
        for (int e = 0; e <= maxe; ++e) {
            cur[static_cast<std::size_t>(k)] = static_cast<char>(e);
            if (e) rem = rem - neg;
            rec(k + 1);
        }
        rem = rem + maxe * neg;
        cur[static_cast<std::size_t>(k)] = 0;
    };
    bool ok = std::all_of(wt.begin(), wt.end(), [](int x) { return x >= 0; });
    if (ok) rec(0);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(const PBWAlgebra& A, int D) {
    std::vector<Monomial> out;
    const int nr = A.n_rad();
    const RootSystem& rs = A.roots();
    Monomial cur = A.unit();
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == nr) {
            out.push_back(cur);
            return;
        }
        int h = rs.rad(k).ht;
        int maxe = left / h;
        if (A.is_isotropic(k)) maxe = std::min(maxe, 1);
        for (int e = 0; e <= maxe; ++e) {
            cur[static_cast<std::size_t>(k)] = static_cast<char>(e);
            rec(k + 1, left - e * h);
        }
        cur[static_cast<std::size_t>(k)] = 0;
    };
    if (D >= 0) rec(0, D);
    return out;
}

WeightSpace::WeightSpace(const PBWAlgebra& A, const Weight& wt) : A_(A), wt_(wt) {
    monos_ = monomials_of_weight(A, wt);
    std::vector<std::pair<Word, Monomial>> tmp;
    for (const auto& m : monos_) tmp.emplace_back(A.lead_word(m), m);
    std::sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return y.first < x.first; });
    monos_.clear();
    for (auto& [w, m] : tmp) {
        lead_.push_back(w);
        monos_.push_back(m);
    }
    const std::size_t n = monos_.size();
    mat_.assign(n, std::vector<Scalar>(n));
    pref_.assign(n, Scalar(1));
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<const WordTrie*> tries;
        Scalar s(1);
        for (int k : A.root_sequence(monos_[r])) {
            tries.push_back(&A.rad_trie(k));
            s *= A.psi_rad(k).s;
        }
        pref_[r] = s;
        std::vector<Laurent> vals = product_coefficients(A.roots(), tries, lead_);
        for (std::size_t c = 0; c < n; ++c) mat_[r][c] = vals[c].to_scalar();
    }
    for (std::size_t r = 0; r < n && triangular_; ++r) {
        if (mat_[r][r].is_zero()) triangular_ = false;
        for (std::size_t c = 0; c < r && triangular_; ++c)
            if (!mat_[r][c].is_zero()) triangular_ = false;
    }
    if (!triangular_) {
        // full inverse of P * M by Gauss-Jordan elimination
        std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a[r][c] = pref_[r] * mat_[r][c];
            a[r][n + r] = Scalar(1);
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = n;
            std::size_t best = 0;
            for (std::size_t r = col; r < n; ++r)
                if (!a[r][col].is_zero() && (piv == n || a[r][col].size_hint() < best)) {
                    piv = r;
                    best = a[r][col].size_hint();
                }
            if (piv == n) {
                rank_deficient_ = true;
                return;
            }
            std::swap(a[piv], a[col]);
            Scalar inv = a[col][col].inv();
            for (auto& x : a[col]) x *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                Scalar f = a[r][col];
                for (std::size_t c = 0; c < 2 * n; ++c)
                    if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
            }
        }
        inv_.assign(n, std::vector<Scalar>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) inv_[r][c] = a[r][n + c];
    }
}

int WeightSpace::index_of(const Monomial& mono) const {
    for (std::size_t k = 0; k < monos_.size(); ++k)
        if (monos_[k] == mono) return static_cast<int>(k);
    return -1;
}

std::vector<Scalar> WeightSpace::eval_tries(const std::vector<const WordTrie*>& tries, const Scalar& c) const {
    std::vector<Laurent> vals = product_coefficients(A_.roots(), tries, lead_);
    std::vector<Scalar> out(vals.size());
    for (std::size_t k = 0; k < vals.size(); ++k) out[k] = c * vals[k].to_scalar();
    return out;
}

std::vector<Scalar> WeightSpace::eval_product(const std::vector<int>& roots, const Scalar& c) const {
    std::vector<const WordTrie*> tries;
    Scalar s = c;
    for (int k : roots) {
        tries.push_back(&A_.rad_trie(k));
        s *= A_.psi_rad(k).s;
    }
    return eval_tries(tries, s);
}

std::vector<Scalar> WeightSpace::eval(const AlgElement& x) const {
    std::vector<Scalar> out(lead_.size());
    for (const auto& [m, c] : x) {
        int r = index_of(m);
        if (r >= 0) {
            Scalar s = c * pref_[static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < lead_.size(); ++k)
                if (!mat_[static_cast<std::size_t>(r)][k].is_zero()) out[k] += s * mat_[static_cast<std::size_t>(r)][k];
        } else {
            std::vector<Scalar> v = eval_product(A_.root_sequence(m), c);
            for (std::size_t k = 0; k < lead_.size(); ++k) out[k] += v[k];
        }
    }
    return out;
}

AlgElement WeightSpace::solve(const std::vector<Scalar>& values) const {
    const std::size_t n = monos_.size();
    if (values.size() != n) throw std::invalid_argument("WeightSpace::solve: size mismatch");
    if (rank_deficient_) throw std::logic_error("WeightSpace::solve: leading-word matrix is singular");
    std::vector<Scalar> x(n);
    if (triangular_) {
        for (std::size_t c = 0; c < n; ++c) {
            Scalar v = values[c];
            for (std::size_t r = 0; r < c; ++r)
                if (!x[r].is_zero() && !mat_[r][c].is_zero()) v -= x[r] * pref_[r] * mat_[r][c];
            x[c] = v / (pref_[c] * mat_[c][c]);
        }
    } else {
        // x^T (P M) = v^T  =>  x^T = v^T (P M)^{-1}
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!values[c].is_zero() && !inv_[c][r].is_zero()) x[r] += values[c] * inv_[c][r];
    }
    AlgElement out;
    for (std::size_t k = 0; k < n; ++k) add_to(out, monos_[k], x[k]);
    return out;
}

}  // namespace osp
