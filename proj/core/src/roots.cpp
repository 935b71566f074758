#include "osp/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace osp {

char family_char(Family f) {
    switch (f) {
        case Family::b: return 'b';
        case Family::c: return 'c';
        case Family::d: return 'd';
    }
    return '?';
}

std::string AlgebraType::name() const {
    std::ostringstream os;
    os << family_char(family) << "_{" << m << "|" << n << "}";
    return os.str();
}

AlgebraType AlgebraType::parse(const std::string& family, int m, int n) {
    AlgebraType g;
    if (family == "b" || family == "B") g.family = Family::b;
    else if (family == "c" || family == "C") g.family = Family::c;
    else if (family == "d" || family == "D") g.family = Family::d;
    else throw std::invalid_argument("unknown family '" + family + "' (expected b, c or d)");
    g.m = m;
    g.n = n;
    g.validate();
    return g;
}

void AlgebraType::validate() const {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (m + n > 8) throw std::invalid_argument("m + n must be at most 8");
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& x : r) x = -x;
    return r;
}

Weight operator*(int k, const Weight& a) {
    Weight r = a;
    for (auto& x : r) x *= k;
    return r;
}

bool is_zero(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Word make_word(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << "w[";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << ",";
        os << static_cast<int>(w[k]);
    }
    os << "]";
    return os.str();
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t s = 1; s < w.size(); ++s)
        if (!(w < w.substr(s))) return false;
    return true;
}

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::isotropic: return "isotropic";
        case Parity::nonisotropic_odd: return "nonisotropic_odd";
    }
    return "?";
}

RootSystem::RootSystem(const AlgebraType& g) : g_(g) {
    g_.validate();
    const int N = g_.N();
    simple_.assign(static_cast<std::size_t>(N), Weight(static_cast<std::size_t>(N), 0));
    switch (g_.family) {
        case Family::b: simple_[0][0] = -1; break;
        case Family::c: simple_[0][0] = -2; break;
        case Family::d:
            simple_[0][0] = -1;
            simple_[0][1] = -1;
            break;
    }
    for (int i = 1; i < N; ++i) {
        simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
        simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    }
    qlet_.resize(static_cast<std::size_t>(N * N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            qlet_[static_cast<std::size_t>(a * N + b)] =
                q_factor(simple_[static_cast<std::size_t>(a)], simple_[static_cast<std::size_t>(b)]);
    build_words();
}

int RootSystem::bilinear(const Weight& a, const Weight& b) const {
    int s = 0;
    for (int k = 0; k < N(); ++k) {
        int t = a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        s += g_.odd_index(k + 1) ? -t : t;
    }
    return s * g_.r();
}

QPow RootSystem::q_factor(const Weight& a, const Weight& b) const {
    QPow p;
    for (int k = 0; k < N(); ++k) {
        int t = a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        if (t == 0) continue;
        if (g_.odd_index(k + 1)) {
            p.exp -= g_.r() * t;
            if (t % 2 != 0) p.sign = -p.sign;
        } else {
            p.exp += g_.r() * t;
        }
    }
    return p;
}

int RootSystem::qi_exp(int i) const {
    if (i == g_.m) return g_.r();
    const Weight& a = simple_[static_cast<std::size_t>(i)];
    return std::abs(bilinear(a, a)) / 2;
}

int RootSystem::root_qexp(const Weight& beta) const {
    int nrm = bilinear(beta, beta);
    if (nrm == 0) return g_.r();
    return std::abs(nrm) / 2;
}

int RootSystem::matching_simple(const Weight& beta) const {
    int nrm = bilinear(beta, beta);
    for (int k = 0; k < N(); ++k) {
        const Weight& a = simple_[static_cast<std::size_t>(k)];
        if (bilinear(a, a) == nrm) return k;
    }
    return -1;
}

Weight RootSystem::weight_of_word(const Word& w) const {
    Weight r(static_cast<std::size_t>(N()), 0);
    for (char ch : w) r = r + simple_[static_cast<std::size_t>(ch)];
    return r;
}

void RootSystem::build_words() {
    const int N = g_.N();
    const int m = g_.m;
    std::vector<Word> words;
    auto range = [](int a, int b) {
        Word w;
        for (int k = a; k <= b; ++k) w.push_back(static_cast<char>(k));
        return w;
    };
    switch (g_.family) {
        case Family::b:
            for (int i = 0; i < N; ++i)
                for (int j = i; j < N; ++j) words.push_back(range(i, j));
            for (int j = 0; j < N; ++j)
                for (int k = j + 1; k < N; ++k) words.push_back(range(0, j) + range(0, k));
            break;
        case Family::c:
            for (int i = 0; i < N; ++i)
                for (int j = i; j < N; ++j) words.push_back(range(i, j));
            for (int k = 1; k < N; ++k)
                for (int j = 1; j < k; ++j) words.push_back(range(0, k) + range(1, j));
            for (int k = 1; k <= m - 1; ++k) words.push_back(range(0, k) + range(1, k));
            break;
        case Family::d:
            words.push_back(range(0, 0));
            for (int i = 2; i < N; ++i) words.push_back(range(0, 0) + range(2, i));
            for (int i = 1; i < N; ++i)
                for (int j = i; j < N; ++j) words.push_back(range(i, j));
            for (int k = 2; k < N; ++k)
                for (int j = 1; j < k; ++j) words.push_back(range(0, 0) + range(2, k) + range(1, j));
            for (int k = m; k < N; ++k) words.push_back(range(0, 0) + range(2, k) + range(1, k));
            break;
    }
    std::sort(words.begin(), words.end());
    for (const Word& w : words) {
        Root r;
        r.word = w;
        r.weight = weight_of_word(w);
        r.coeffs.assign(static_cast<std::size_t>(N), 0);
        for (char ch : w) ++r.coeffs[static_cast<std::size_t>(ch)];
        r.ht = static_cast<int>(w.size());
        r.norm = bilinear(r.weight, r.weight);
        r.radical = r.coeffs[0] > 0;
        int oddsum = 0;
        for (int a = m + 1; a <= N; ++a) oddsum += std::abs(r.weight[static_cast<std::size_t>(a - 1)]);
        if (r.norm == 0) r.parity = Parity::isotropic;
        else if (oddsum % 2 != 0) r.parity = Parity::nonisotropic_odd;
        else r.parity = Parity::even;
        if (r.radical) {
            std::vector<int> idx;
            for (int a = 1; a <= N; ++a)
                if (r.weight[static_cast<std::size_t>(a - 1)] != 0) idx.push_back(a);
            if (idx.size() == 1) {
                r.i = r.j = idx[0];
            } else if (idx.size() == 2) {
                r.i = idx[0];
                r.j = idx[1];
            } else {
                throw std::logic_error("radical root with unexpected support");
            }
        }
        if (weight_index_.count(r.weight)) throw std::logic_error("duplicate root weight");
        weight_index_[r.weight] = static_cast<int>(all_.size());
        word_index_[w] = static_cast<int>(all_.size());
        all_.push_back(r);
        if (r.radical) rad_.push_back(r);
    }
    for (std::size_t k = 0; k < rad_.size(); ++k) pair_index_[{rad_[k].i, rad_[k].j}] = static_cast<int>(k);
}

int RootSystem::rad_index(int i, int j) const {
    auto it = pair_index_.find({i, j});
    return it == pair_index_.end() ? -1 : it->second;
}

int RootSystem::word_index(const Word& w) const {
    auto it = word_index_.find(w);
    return it == word_index_.end() ? -1 : it->second;
}

int RootSystem::weight_index(const Weight& w) const {
    auto it = weight_index_.find(w);
    return it == weight_index_.end() ? -1 : it->second;
}

const Word& RootSystem::lyndon_word(int i, int j) const {
    int k = rad_index(i, j);
    if (k < 0) {
        std::ostringstream os;
        os << "(" << i << "," << j << ") is not a root of " << g_.name() << " outside the Levi part";
        throw std::invalid_argument(os.str());
    }
    return rad_[static_cast<std::size_t>(k)].word;
}

bool RootSystem::is_root(const Weight& w) const {
    return weight_index_.count(w) > 0 || weight_index_.count(-w) > 0;
}

bool RootSystem::is_root_or_double(const Weight& w) const {
    if (is_root(w)) return true;
    if (g_.family != Family::b) return false;
    int nz = -1;
    for (int a = 0; a < N(); ++a) {
        if (w[static_cast<std::size_t>(a)] == 0) continue;
        if (nz >= 0) return false;
        nz = a;
    }
    return nz >= 0 && g_.odd_index(nz + 1) && std::abs(w[static_cast<std::size_t>(nz)]) == 2;
}

std::vector<int> RootSystem::simple_coords2(const Weight& w) const {
    // w = sum_i k_i alpha_i with alpha_i = delta_i - delta_{i+1} (i >= 1), so coordinate a >= 3 is
    // k_a - k_{a-1} (k_N = 0); coordinates 1 and 2 also see alpha_0
    const int N = g_.N();
    std::vector<int> k(static_cast<std::size_t>(N) + 1, 0);  // doubled coefficients, k[N] = 0
    auto w2 = [&](int a) { return 2 * w[static_cast<std::size_t>(a - 1)]; };
    for (int a = N; a >= 3; --a) k[static_cast<std::size_t>(a - 1)] = k[static_cast<std::size_t>(a)] - w2(a);
    const int k2 = k[2];
    switch (g_.family) {
        case Family::b:  // alpha_0 = -delta_1
            k[1] = k2 - w2(2);
            k[0] = k[1] - w2(1);
            break;
        case Family::c: {  // alpha_0 = -2 delta_1
            k[1] = k2 - w2(2);
            int num = k[1] - w2(1);
            if (num % 2 != 0) throw std::logic_error("simple_coords2: non-integral");
            k[0] = num / 2;
            break;
        }
        case Family::d: {  // alpha_0 = -delta_1 - delta_2
            int num = k2 - w2(1) - w2(2);
            if (num % 2 != 0) throw std::logic_error("simple_coords2: non-integral");
            k[0] = num / 2;
            k[1] = w2(1) + k[0];
            break;
        }
    }
    k.pop_back();
    return k;
}

int RootSystem::height2(const Weight& w) const {
    int s = 0;
    for (int x : simple_coords2(w)) s += x;
    return s;
}

}  // namespace osp
