#include "osp/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace osp {

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

namespace {

std::string pair_name(const Root& r) {
    std::ostringstream os;
    os << "(" << r.i << "," << r.j << ")";
    return os.str();
}

std::string element_string(const PBWAlgebra& A, const AlgElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") " << A.monomial_string(m);
    }
    return os.str();
}

Weight positive_weight(const PBWAlgebra& A, const std::vector<int>& roots) {
    Weight w(static_cast<std::size_t>(A.roots().N()), 0);
    for (int k : roots) w = w - A.roots().rad(k).weight;
    return w;
}

class SpaceCache {
public:
    explicit SpaceCache(const PBWAlgebra& A) : A_(A) {}
    const WeightSpace& get(const Weight& w) {
        auto it = map_.find(w);
        if (it == map_.end()) it = map_.emplace(w, std::make_unique<WeightSpace>(A_, w)).first;
        return *it->second;
    }

private:
    const PBWAlgebra& A_;
    std::map<Weight, std::unique_ptr<WeightSpace>> map_;
};

CheckResult commutator_pair(const PBWAlgebra& A, SpaceCache& cache, int alpha, int beta) {
    const RootSystem& rs = A.roots();
    const Root& ra = rs.rad(alpha);
    const Root& rb = rs.rad(beta);
    CheckResult res;
    res.name = "[f" + pair_name(rb) + ", f" + pair_name(ra) + "]";
    res.method = "leading-word projection";
    const WeightSpace& ws = cache.get(positive_weight(A, {alpha, beta}));
    if (ws.rank_deficient()) {
        res.detail = "leading-word matrix is singular";
        return res;
    }
    Scalar tw(rs.q_factor(ra.weight, rb.weight).inv());
    std::vector<Scalar> lhs = ws.eval_product({beta, alpha});
    std::vector<Scalar> ab = ws.eval_product({alpha, beta}, tw);
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= ab[k];
    std::vector<RootProduct> table = A.commutator_table(alpha, beta);
    std::vector<Scalar> rhs(lhs.size());
    for (const RootProduct& t : table) {
        std::vector<Scalar> v = ws.eval_product(t.roots, t.c);
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += v[k];
    }
    // two further words outside the leading set: l(beta)l(alpha) and l(alpha)l(beta)
    std::vector<Word> extra{rb.word + ra.word, ra.word + rb.word};
    auto eval_extra = [&](const std::vector<int>& roots, const Scalar& c) {
        std::vector<const WordTrie*> tries;
        Scalar s = c;
        for (int k : roots) {
            tries.push_back(&A.rad_trie(k));
            s *= A.psi_rad(k).s;
        }
        std::vector<Laurent> v = product_coefficients(rs, tries, extra);
        std::vector<Scalar> out;
        for (const auto& l : v) out.push_back(s * l.to_scalar());
        return out;
    };
    std::vector<Scalar> lx = eval_extra({beta, alpha}, Scalar(1));
    std::vector<Scalar> lx2 = eval_extra({alpha, beta}, tw);
    std::vector<Scalar> rx(extra.size());
    for (const RootProduct& t : table) {
        std::vector<Scalar> v = eval_extra(t.roots, t.c);
        for (std::size_t k = 0; k < rx.size(); ++k) rx[k] += v[k];
    }
    bool ok = true;
    for (std::size_t k = 0; k < lhs.size() && ok; ++k)
        if (lhs[k] != rhs[k]) ok = false;
    for (std::size_t k = 0; k < extra.size() && ok; ++k)
        if (lx[k] - lx2[k] != rx[k]) ok = false;
    AlgElement shuffle_side = ws.solve(lhs);
    AlgElement table_side;
    for (const RootProduct& t : table) add_to(table_side, A.from_product(t), Scalar(1));
    if (shuffle_side != table_side) ok = false;
    res.pass = ok;
    std::ostringstream os;
    os << "dim " << ws.dim() << (ws.triangular() ? ", triangular" : ", general") << "; value "
       << element_string(A, shuffle_side);
    if (!ok) os << "; table " << element_string(A, table_side);
    res.detail = os.str();
    return res;
}

// expanded shuffle image of a product of radical root vectors with coefficient
ShuffleVec psi_product(const PBWAlgebra& A, const std::vector<int>& roots, const Scalar& c) {
    ScaledVec acc;
    acc.v.emplace(Word(), Laurent(1));
    for (int r : roots) acc = shuffle(A.roots(), acc, A.psi_rad(r));
    acc.s *= c;
    return acc.expand();
}

}  // namespace

CheckResult verify_commutator_pair(const PBWAlgebra& A, int alpha, int beta) {
    SpaceCache cache(A);
    return commutator_pair(A, cache, alpha, beta);
}

Report verify_commutators(const PBWAlgebra& A) {
    Report rep;
    rep.suite = "commutators";
    rep.algebra = A.type().name();
    SpaceCache cache(A);
    for (int b = 0; b < A.n_rad(); ++b)
        for (int a = 0; a < b; ++a) {
            try {
                rep.add(commutator_pair(A, cache, a, b));
            } catch (const std::exception& e) {
                CheckResult r;
                r.name = "[f" + pair_name(A.roots().rad(b)) + ", f" + pair_name(A.roots().rad(a)) + "]";
                r.detail = e.what();
                rep.add(r);
            }
        }
    return rep;
}

Report verify_adjoint(const PBWAlgebra& A) {
    Report rep;
    rep.suite = "adjoint";
    rep.algebra = A.type().name();
    const RootSystem& rs = A.roots();
    SpaceCache cache(A);
    for (int i = 1; i < rs.N(); ++i) {
        const Weight& ai = rs.simple_roots()[static_cast<std::size_t>(i)];
        const int qi = rs.qi_exp(i);
        for (int b = 0; b < A.n_rad(); ++b) {
            const Root& rb = rs.rad(b);
            const ScaledVec& psi = A.psi_rad(b);
            for (Op op : {Op::e, Op::f}) {
                CheckResult res;
                res.name = std::string(op == Op::e ? "e" : "f") + std::to_string(i) + " . f" + pair_name(rb);
                res.method = "full shuffle expansion";
                try {
                    ShuffleVec first;
                    if (op == Op::e) {
                        // e_i . u = -q(a_i, a_i + wt u)^{-1} / (q_i - q_i^{-1}) e'_i(u), e'_i strips a final letter i
                        Scalar c = -Scalar(rs.q_factor(ai, ai - rb.weight).inv()) /
                                   (Scalar::q_pow(qi) - Scalar::q_pow(-qi));
                        for (const auto& [w, l] : psi.v)
                            if (!w.empty() && static_cast<int>(w.back()) == i)
                                add_to(first, w.substr(0, w.size() - 1), c * psi.s * l.to_scalar());
                    } else {
                        // f_i u - k_i u k_i^{-1} f_i
                        LaurentVec li;
                        li.emplace(Word(1, static_cast<char>(i)), Laurent(1));
                        LaurentVec x = shuffle(rs, li, psi.v);
                        LaurentVec y = shuffle(rs, psi.v, li);
                        QPow k = rs.q_factor(ai, -rb.weight);
                        add_to(x, y, QPow{-k.sign, k.exp});
                        for (const auto& [w, l] : x) add_to(first, w, psi.s * l.to_scalar());
                    }
                    ShuffleVec table;
                    for (const RootProduct& t : A.adjoint_table(op, i, b))
                        for (const auto& [w, c] : psi_product(A, t.roots, t.c)) add_to(table, w, c);
                    bool ok = first == table;
                    AlgElement alg = A.straighten({b});
                    AlgElement via_tables = A.adjoint(op, i, alg);
                    // projection of the first-principles value into the PBW basis
                    Weight tw = -rb.weight + (op == Op::e ? ai : -ai);
                    AlgElement projected;
                    if (!first.empty()) {
                        const WeightSpace& ws = cache.get(tw);
                        std::vector<Scalar> vals;
                        for (const Word& w : ws.lead_words()) {
                            auto it = first.find(w);
                            vals.push_back(it == first.end() ? Scalar(0) : it->second);
                        }
                        projected = ws.solve(vals);
                        if (A.psi(projected) != first) ok = false;
                    }
                    if (projected != via_tables) ok = false;
                    res.pass = ok;
                    res.detail = element_string(A, via_tables);
                    if (!ok) res.detail += "; first principles " + element_string(A, projected);
                } catch (const std::exception& e) {
                    res.detail = e.what();
                }
                rep.add(res);
            }
        }
    }
    return rep;
}

Report verify_pbw(const PBWAlgebra& A, int max_degree, int max_height) {
    Report rep;
    rep.suite = "pbw";
    rep.algebra = A.type().name();
    const RootSystem& rs = A.roots();
    for (int k = 0; k < A.n_rad(); ++k) {
        const Root& r = rs.rad(k);
        if (r.ht > max_height) continue;
        CheckResult res;
        res.name = "root vector f" + pair_name(r);
        res.method = "recursion vs closed form";
        ShuffleVec rec = A.psi_root(A.rad_to_all(k)).expand();
        ShuffleVec closed = A.psi_rad(k).expand();
        bool ok = rec == closed;
        Word top = closed.empty() ? Word() : closed.rbegin()->first;
        if (top != r.word) ok = false;
        res.pass = ok;
        res.detail = "leading word " + word_to_string(top);
        rep.add(res);
    }
    std::map<Weight, int> weights;
    for (const Monomial& m : monomials_up_to_degree(A, max_degree)) {
        if (A.degree(m) == 0) continue;
        weights[A.weight(m)] += 1;
    }
    for (const auto& [w, count] : weights) {
        CheckResult res;
        std::ostringstream name;
        name << "weight (";
        for (std::size_t a = 0; a < w.size(); ++a) name << (a ? "," : "") << w[a];
        name << ")";
        res.name = name.str();
        WeightSpace ws(A, w);
        res.method = ws.triangular() ? "triangular leading-word matrix" : "exact elimination";
        res.pass = !ws.rank_deficient() && static_cast<int>(ws.dim()) == count;
        res.detail = "rank " + std::to_string(ws.rank_deficient() ? -1 : static_cast<int>(ws.dim())) + " of " +
                     std::to_string(count);
        rep.add(res);
    }
    return rep;
}

AlgElement omega_map(const PBWAlgebra& from, const PBWAlgebra& to, const AlgElement& x) {
    const int N = from.roots().N();
    std::vector<int> image(static_cast<std::size_t>(from.n_rad()));
    std::vector<int> sign(static_cast<std::size_t>(from.n_rad()));
    for (int k = 0; k < from.n_rad(); ++k) {
        const Root& r = from.roots().rad(k);
        int t = to.roots().rad_index(N + 1 - r.j, N + 1 - r.i);
        if (t < 0) throw std::logic_error("omega: no image for " + pair_name(r));
        image[static_cast<std::size_t>(k)] = t;
        sign[static_cast<std::size_t>(k)] = r.i == r.j ? -1 : 1;
    }
    AlgElement out;
    for (const auto& [m, c] : x) {
        std::vector<int> seq = from.root_sequence(m);
        std::reverse(seq.begin(), seq.end());
        int s = 1;
        for (int& k : seq) {
            s *= sign[static_cast<std::size_t>(k)];
            k = image[static_cast<std::size_t>(k)];
        }
        add_to(out, to.straighten(seq), c.omega() * Scalar(s));
    }
    return out;
}

Report verify_omega(int m, int n, int samples, int max_degree, std::uint64_t seed) {
    PBWAlgebra C(AlgebraType::parse("c", m, n));
    PBWAlgebra D(AlgebraType::parse("d", n, m));
    Report rep;
    rep.suite = "omega";
    rep.algebra = C.type().name() + " -> " + D.type().name();
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> seq;
        while (seq.size() < 2) {
            int total = std::uniform_int_distribution<int>(2, std::max(2, max_degree))(rng);
            seq.clear();
            int budget = total;
            while (true) {
                std::vector<int> fit;
                for (int k = 0; k < C.n_rad(); ++k)
                    if (C.roots().rad(k).ht <= budget) fit.push_back(k);
                if (fit.empty()) break;
                int k = fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
                seq.push_back(k);
                budget -= C.roots().rad(k).ht;
            }
        }
        std::size_t cut = std::uniform_int_distribution<std::size_t>(1, seq.size() - 1)(rng);
        std::vector<int> x(seq.begin(), seq.begin() + static_cast<long>(cut));
        std::vector<int> y(seq.begin() + static_cast<long>(cut), seq.end());
        CheckResult res;
        std::ostringstream name;
        name << "sample " << s << ":";
        for (int k : x) name << " f" << pair_name(C.roots().rad(k));
        name << " |";
        for (int k : y) name << " f" << pair_name(C.roots().rad(k));
        res.name = name.str();
        res.method = "straighten on both sides";
        try {
            std::vector<int> xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            AlgElement lhs = omega_map(C, D, C.straighten(xy));
            AlgElement ox = omega_map(C, D, C.straighten(x));
            AlgElement oy = omega_map(C, D, C.straighten(y));
            AlgElement rhs = D.multiply(oy, ox);
            res.pass = lhs == rhs;
            res.detail = element_string(D, lhs);
        } catch (const std::exception& e) {
            res.detail = e.what();
        }
        rep.add(res);
    }
    return rep;
}

}  // namespace osp
