#include "osp/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace osp {

ShuffleVec ScaledVec::expand() const {
    ShuffleVec r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : v) add_to(r, w, s * c.to_scalar());
    return r;
}

void add_to(LaurentVec& acc, const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

void add_to(LaurentVec& acc, const LaurentVec& v, const QPow& p) {
    for (const auto& [w, c] : v) add_to(acc, w, c * p);
}

void add_to(ShuffleVec& acc, const Word& w, const Scalar& c) {
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

struct WordShuffler {
    const RootSystem& rs;
    const Word& u;
    const Word& v;
    const Laurent& c;
    LaurentVec& acc;
    std::vector<QPow> pre;  // pre[i*N + b] = q(|u_0..u_{i-1}|, alpha_b)^{-1}
    Word cur;

    WordShuffler(const RootSystem& r, const Word& uu, const Word& vv, const Laurent& cc, LaurentVec& a)
        : rs(r), u(uu), v(vv), c(cc), acc(a) {
        const int N = rs.N();
        pre.assign((u.size() + 1) * static_cast<std::size_t>(N), QPow{});
        for (std::size_t i = 1; i <= u.size(); ++i)
            for (int b = 0; b < N; ++b)
                pre[i * static_cast<std::size_t>(N) + static_cast<std::size_t>(b)] =
                    pre[(i - 1) * static_cast<std::size_t>(N) + static_cast<std::size_t>(b)] *
                    rs.q_letter(u[i - 1], b).inv();
        cur.reserve(u.size() + v.size());
    }

    void run(std::size_t i, std::size_t j, const QPow& tw) {
        if (i == u.size() && j == v.size()) {
            add_to(acc, cur, c * tw);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            run(i + 1, j, tw);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            run(i, j + 1, tw * pre[i * static_cast<std::size_t>(rs.N()) + static_cast<std::size_t>(v[j])]);
            cur.pop_back();
        }
    }
};

}  // namespace

void shuffle_words(const RootSystem& rs, const Word& u, const Word& v, const Laurent& c, LaurentVec& acc) {
    if (c.is_zero()) return;
    WordShuffler sh(rs, u, v, c, acc);
    sh.run(0, 0, QPow{});
}

LaurentVec shuffle(const RootSystem& rs, const LaurentVec& a, const LaurentVec& b) {
    LaurentVec r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) shuffle_words(rs, u, v, cu * cv, r);
    return r;
}

ShuffleVec shuffle(const RootSystem& rs, const ShuffleVec& a, const ShuffleVec& b) {
    ShuffleVec r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            LaurentVec tmp;
            shuffle_words(rs, u, v, Laurent(1), tmp);
            Scalar cc = cu * cv;
            for (const auto& [w, l] : tmp) add_to(r, w, cc * l.to_scalar());
        }
    return r;
}

ScaledVec shuffle(const RootSystem& rs, const ScaledVec& a, const ScaledVec& b) {
    ScaledVec r;
    r.s = a.s * b.s;
    if (r.s.is_zero()) return ScaledVec{Scalar(0), {}};
    r.v = shuffle(rs, a.v, b.v);
    return r;
}

ScaledVec shuffle_bracket(const RootSystem& rs, const ScaledVec& a, const Weight& wa, const ScaledVec& b,
                          const Weight& wb) {
    ScaledVec r;
    r.s = a.s * b.s;
    LaurentVec ab = shuffle(rs, a.v, b.v);
    LaurentVec ba = shuffle(rs, b.v, a.v);
    QPow c = rs.q_factor(wa, wb).inv();
    add_to(ab, ba, QPow{-c.sign, c.exp});
    r.v = std::move(ab);
    return r;
}

ShuffleVec psi_word(const RootSystem& rs, const std::vector<int>& gens) {
    LaurentVec cur;
    cur.emplace(Word(), Laurent(1));
    for (int g : gens) {
        LaurentVec letter;
        letter.emplace(Word(1, static_cast<char>(g)), Laurent(1));
        cur = shuffle(rs, cur, letter);
    }
    ShuffleVec r;
    for (const auto& [w, c] : cur) add_to(r, w, c.to_scalar());
    return r;
}

namespace {

Scalar one_minus_qa2(const RootSystem& rs, int a) {
    // 1 - qq_a^2, qq_a = q^r (even) or -q^{-r} (odd)
    int r = rs.type().r();
    int e = rs.type().odd_index(a) ? -2 * r : 2 * r;
    return Scalar(1) - Scalar::q_pow(e);
}

Word range_word(int a, int b) {
    Word w;
    for (int k = a; k <= b; ++k) w.push_back(static_cast<char>(k));
    return w;
}

LaurentVec prefix0(const LaurentVec& v) {
    LaurentVec r;
    for (const auto& [w, c] : v) r.emplace(Word(1, '\0') + w, c);
    return r;
}

LaurentVec single(const Word& w) {
    LaurentVec r;
    r.emplace(w, Laurent(1));
    return r;
}

}  // namespace

Scalar a_coeff(const RootSystem& rs, int k) {
    Scalar r(1);
    for (int a = 1; a <= k; ++a) r *= one_minus_qa2(rs, a);
    return r;
}

Scalar b_coeff(const RootSystem& rs, int k) {
    Scalar r(1);
    for (int a = 2; a <= k; ++a) r *= one_minus_qa2(rs, a);
    return r;
}

ScaledVec psi_image(const RootSystem& rs, int i, int j) {
    if (rs.rad_index(i, j) < 0) throw std::invalid_argument("psi_image: not a radical root");
    const Family f = rs.type().family;
    const int m = rs.type().m;
    const Scalar q = Scalar::q();
    const Scalar qinv_minus_q = Scalar::q_pow(-1) - q;
    ScaledVec r;
    auto shuffle_w = [&](const Word& a, const Word& b) {
        LaurentVec acc;
        shuffle_words(rs, a, b, Laurent(1), acc);
        return acc;
    };
    switch (f) {
        case Family::b:
            if (i == 1 && j == 1) {
                r.v = single(range_word(0, 0));
            } else if (i == j) {
                r.s = a_coeff(rs, i - 1);
                r.v = single(range_word(0, i - 1));
            } else if (i == 1) {
                r.s = qinv_minus_q * a_coeff(rs, j - 1);
                r.v = single(Word(1, '\0') + range_word(0, j - 1));
            } else {
                r.s = qinv_minus_q * a_coeff(rs, i - 1) * a_coeff(rs, j - 1);
                r.v = prefix0(shuffle_w(range_word(1, i - 1), range_word(0, j - 1)));
            }
            break;
        case Family::c:
            if (i == 1 && j == 1) {
                r.v = single(range_word(0, 0));
            } else if (i == 1) {
                r.s = (Scalar(1) + q * q) * a_coeff(rs, j - 1);
                r.v = single(range_word(0, j - 1));
            } else if (i < j) {
                r.s = (Scalar(1) + q * q) * a_coeff(rs, i - 1) * a_coeff(rs, j - 1);
                r.v = prefix0(shuffle_w(range_word(1, i - 1), range_word(1, j - 1)));
            } else {
                if (i > m) throw std::logic_error("psi_image: unexpected root");
                r.s = q * a_coeff(rs, i - 1) * a_coeff(rs, i - 1);
                r.v = prefix0(shuffle_w(range_word(1, i - 1), range_word(1, i - 1)));
            }
            break;
        case Family::d:
            if (i == 1 && j == 2) {
                r.v = single(range_word(0, 0));
            } else if (i == 1) {
                r.s = b_coeff(rs, j - 1);
                r.v = single(Word(1, '\0') + range_word(2, j - 1));
            } else if (i < j) {
                r.s = (Scalar(1) - q * q) * b_coeff(rs, i - 1) * b_coeff(rs, j - 1);
                LaurentVec acc = shuffle_w(range_word(1, i - 1), range_word(2, j - 1));
                LaurentVec t = shuffle_w(range_word(2, i - 1), range_word(1, j - 1));
                add_to(acc, t, QPow{-1, 1});
                r.v = prefix0(acc);
            } else {
                if (i <= m) throw std::logic_error("psi_image: unexpected root");
                r.s = q * (Scalar(1) - q * q) * b_coeff(rs, i - 1) * b_coeff(rs, i - 1);
                r.v = prefix0(shuffle_w(range_word(1, i - 1), range_word(2, i - 1)));
            }
            break;
    }
    return r;
}

Word max_word(const LaurentVec& v) {
    Word best;
    bool found = false;
    for (const auto& [w, c] : v) {
        if (c.is_zero()) continue;
        if (!found || best < w) {
            best = w;
            found = true;
        }
    }
    return best;
}

WordTrie::WordTrie(const RootSystem& rs, const LaurentVec& v) : alpha_(rs.N()) {
    child_.assign(static_cast<std::size_t>(alpha_), -1);
    value_.emplace_back();
    twist_.assign(static_cast<std::size_t>(alpha_), QPow{});
    bool first = true;
    for (const auto& [w, c] : v) {
        if (c.is_zero()) continue;
        if (first) {
            len_ = static_cast<int>(w.size());
            first = false;
        } else if (static_cast<int>(w.size()) != len_) {
            throw std::invalid_argument("WordTrie: inhomogeneous vector");
        }
        empty_ = false;
        int node = 0;
        for (char ch : w) {
            int l = static_cast<int>(ch);
            int nx = child(node, l);
            if (nx < 0) {
                nx = static_cast<int>(value_.size());
                child_[static_cast<std::size_t>(node * alpha_ + l)] = nx;
                child_.resize(child_.size() + static_cast<std::size_t>(alpha_), -1);
                value_.emplace_back();
                for (int b = 0; b < alpha_; ++b)
                    twist_.push_back(twist(node, b) * rs.q_letter(l, b).inv());
            }
            node = nx;
        }
        value_[static_cast<std::size_t>(node)] += c;
    }
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
        return h;
    }
};

using StateMap = std::unordered_map<std::vector<int>, Laurent, VecHash>;

struct ProductEvaluator {
    const std::vector<const WordTrie*>& f;
    std::vector<Word> words;  // sorted, unique
    std::vector<Laurent> out;

    void step(const StateMap& cur, char letter, StateMap& next) const {
        const int l = static_cast<int>(letter);
        for (const auto& [nodes, c] : cur) {
            QPow tw{};
            for (std::size_t j = 0; j < f.size(); ++j) {
                int nx = f[j]->child(nodes[j], l);
                if (nx >= 0) {
                    std::vector<int> nn = nodes;
                    nn[j] = nx;
                    auto it = next.find(nn);
                    if (it == next.end()) next.emplace(std::move(nn), c * tw);
                    else it->second.add_scaled(c, tw);
                }
                tw = tw * f[j]->twist(nodes[j], l);
            }
        }
    }

    Laurent finish(const StateMap& cur) const {
        Laurent total;
        for (const auto& [nodes, c] : cur) {
            Laurent t = c;
            for (std::size_t j = 0; j < f.size() && !t.is_zero(); ++j) t = t * f[j]->value(nodes[j]);
            total += t;
        }
        return total;
    }

    void run(std::size_t lo, std::size_t hi, std::size_t depth, const StateMap& cur) {
        if (cur.empty()) return;
        if (depth == words[lo].size()) {
            Laurent v = finish(cur);
            for (std::size_t k = lo; k < hi; ++k) out[k] = v;
            return;
        }
        std::size_t a = lo;
        while (a < hi) {
            char letter = words[a][depth];
            std::size_t b = a;
            while (b < hi && words[b][depth] == letter) ++b;
            StateMap next;
            step(cur, letter, next);
            run(a, b, depth + 1, next);
            a = b;
        }
    }
};

}  // namespace

std::vector<Laurent> product_coefficients(const RootSystem& rs, const std::vector<const WordTrie*>& factors,
                                          const std::vector<Word>& words) {
    (void)rs;
    std::vector<Laurent> result(words.size());
    int total = 0;
    for (const auto* t : factors) {
        if (t->empty()) return result;
        total += t->length();
    }
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Word> valid;
    for (const auto& w : sorted)
        if (static_cast<int>(w.size()) == total) valid.push_back(w);
    ProductEvaluator ev{factors, valid, std::vector<Laurent>(valid.size())};
    if (!valid.empty()) {
        StateMap init;
        init.emplace(std::vector<int>(factors.size(), 0), Laurent(1));
        ev.run(0, valid.size(), 0, init);
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
        auto it = std::lower_bound(valid.begin(), valid.end(), words[k]);
        if (it != valid.end() && *it == words[k])
            result[k] = ev.out[static_cast<std::size_t>(it - valid.begin())];
    }
    return result;
}

}  // namespace osp
