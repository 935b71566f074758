#include "osp/radcrystal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace osp {

const char* local_kind_name(LocalKind k) {
    switch (k) {
        case LocalKind::pair: return "pair";
        case LocalKind::delta_b_lower: return "delta-b-lower";
        case LocalKind::delta_b_upper: return "delta-b-upper";
        case LocalKind::delta_b_odd: return "delta-b-odd";
        case LocalKind::delta_c_lower: return "delta-c-lower";
        case LocalKind::delta_c_odd: return "delta-c-odd";
        case LocalKind::delta_d_upper: return "delta-d-upper";
        case LocalKind::delta_d_odd: return "delta-d-odd";
        case LocalKind::trivial: return "trivial";
    }
    return "?";
}

RadCrystal::RadCrystal(const AlgebraType& g) : rs_(g) {
    const int N = rs_.N();
    const int m = g.m;
    for (int k = 0; k < n_rad(); ++k) {
        ht_.push_back(rs_.rad(k).ht);
        iso_.push_back(rs_.rad(k).parity == Parity::isotropic);
        if (rs_.rad(k).weight == rs_.simple_roots()[0]) alpha0_ = k;
    }
    if (alpha0_ < 0) throw std::logic_error("alpha_0 is not a radical root");
    factors_.resize(static_cast<std::size_t>(N));
    for (int i = 1; i < N; ++i) {
        std::vector<LocalFactor>& fs = factors_[static_cast<std::size_t>(i)];
        for (int k = 1; k < i; ++k) {
            LocalFactor f;
            f.roots = {rs_.rad_index(k, i), rs_.rad_index(k, i + 1), -1};
            fs.push_back(f);
        }
        LocalFactor d;
        d.roots = {rs_.rad_index(i, i), rs_.rad_index(i, i + 1), rs_.rad_index(i + 1, i + 1)};
        switch (g.family) {
            case Family::b:
                d.kind = i < m ? LocalKind::delta_b_lower : (i == m ? LocalKind::delta_b_odd : LocalKind::delta_b_upper);
                break;
            case Family::c:
                d.kind = i < m ? LocalKind::delta_c_lower : (i == m ? LocalKind::delta_c_odd : LocalKind::trivial);
                break;
            case Family::d:
                d.kind = i < m ? LocalKind::trivial : (i == m ? LocalKind::delta_d_odd : LocalKind::delta_d_upper);
                break;
        }
        fs.push_back(d);
        for (int l = i + 2; l <= N; ++l) {
            LocalFactor f;
            f.roots = {rs_.rad_index(i, l), rs_.rad_index(i + 1, l), -1};
            fs.push_back(f);
        }
        for (const LocalFactor& f : fs) {
            if (f.kind == LocalKind::pair && (f.roots[0] < 0 || f.roots[1] < 0))
                throw std::logic_error("missing pair root");
        }
    }
}

Regime RadCrystal::regime(int i) const {
    if (i < type().m) return Regime::lower;
    if (i > type().m) return Regime::upper;
    return Regime::odd;
}

RadArray RadCrystal::from_pairs(const std::map<std::pair<int, int>, int>& entries) const {
    RadArray x = zero();
    for (const auto& [ij, v] : entries) {
        int k = rs_.rad_index(ij.first, ij.second);
        if (k < 0)
            throw std::invalid_argument("(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                        ") is not a radical root of " + type().name());
        x.c[static_cast<std::size_t>(k)] = v;
    }
    if (!valid(x)) throw std::invalid_argument("exponent array out of range (negative, or isotropic entry > 1)");
    return x;
}

bool RadCrystal::valid(const RadArray& x) const {
    if (static_cast<int>(x.c.size()) != n_rad()) return false;
    for (int k = 0; k < n_rad(); ++k) {
        int v = x.c[static_cast<std::size_t>(k)];
        if (v < 0 || (iso_[static_cast<std::size_t>(k)] && v > 1)) return false;
    }
    return true;
}

Weight RadCrystal::weight(const RadArray& x) const {
    Weight w(static_cast<std::size_t>(rs_.N()), 0);
    for (int k = 0; k < n_rad(); ++k)
        if (int v = x.c[static_cast<std::size_t>(k)]) w = w - v * rs_.rad(k).weight;
    return w;
}

int RadCrystal::degree(const RadArray& x) const {
    int d = 0;
    for (int k = 0; k < n_rad(); ++k) d += x.c[static_cast<std::size_t>(k)] * ht_[static_cast<std::size_t>(k)];
    return d;
}

std::string RadCrystal::to_string(const RadArray& x) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int k = 0; k < n_rad(); ++k) {
        int v = x.c[static_cast<std::size_t>(k)];
        if (!v) continue;
        os << (first ? "" : ", ") << '(' << rs_.rad(k).i << ',' << rs_.rad(k).j << "):" << v;
        first = false;
    }
    os << '}';
    return os.str();
}

int RadCrystal::at(const RadArray& x, int i, int j) const {
    int k = rs_.rad_index(i, j);
    return k < 0 ? 0 : x.c[static_cast<std::size_t>(k)];
}

const std::vector<LocalFactor>& RadCrystal::factors(int i) const {
    if (i < 1 || i >= rs_.N()) throw std::invalid_argument("factors: index out of range 1..m+n-1");
    return factors_[static_cast<std::size_t>(i)];
}

std::vector<int> RadCrystal::support(int i) const {
    std::vector<int> out;
    for (const LocalFactor& f : factors(i))
        for (int k : f.roots)
            if (k >= 0) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

LocalState RadCrystal::read(const LocalFactor& fac, const RadArray& x) const {
    LocalState s{0, 0, 0};
    for (int t = 0; t < 3; ++t)
        if (fac.roots[static_cast<std::size_t>(t)] >= 0)
            s[static_cast<std::size_t>(t)] = x.c[static_cast<std::size_t>(fac.roots[static_cast<std::size_t>(t)])];
    return s;
}

void RadCrystal::write(const LocalFactor& fac, const LocalState& s, RadArray& x) const {
    for (int t = 0; t < 3; ++t)
        if (fac.roots[static_cast<std::size_t>(t)] >= 0)
            x.c[static_cast<std::size_t>(fac.roots[static_cast<std::size_t>(t)])] = s[static_cast<std::size_t>(t)];
}

bool RadCrystal::local_valid(const LocalFactor& fac, const LocalState& s) const {
    for (int t = 0; t < 3; ++t) {
        int k = fac.roots[static_cast<std::size_t>(t)];
        int v = s[static_cast<std::size_t>(t)];
        if (v < 0) return false;
        if (k < 0 && v != 0) return false;
        if (k >= 0 && iso_[static_cast<std::size_t>(k)] && v > 1) return false;
    }
    return true;
}

std::optional<LocalState> RadCrystal::local_f(const LocalFactor& fac, const LocalState& s) const {
    const int a = s[0], b = s[1], c = s[2];
    std::optional<LocalState> r;
    switch (fac.kind) {
        case LocalKind::pair:
            if (a >= 1) r = LocalState{a - 1, b + 1, 0};
            break;
        case LocalKind::delta_b_lower:
            if (a - c >= 2) r = LocalState{a - 2, b + 1, c};
            else if (a - c == 1) r = LocalState{a - 1, b, c + 1};
            else if (b >= 1) r = LocalState{a, b - 1, c + 2};
            break;
        case LocalKind::delta_b_upper:
            if (a >= 1) r = LocalState{a - 1, b, c + 1};
            break;
        case LocalKind::delta_b_odd:
            if (a >= 2 && b == 0) r = LocalState{a - 2, 1, c};
            else if (a == 1 && b == 0) r = LocalState{0, 0, c + 1};
            break;
        case LocalKind::delta_c_lower:
            if (a - c >= 1) r = LocalState{a - 1, b + 1, c};
            else if (b >= 1) r = LocalState{a, b - 1, c + 1};
            break;
        case LocalKind::delta_c_odd:
            if (a >= 1) r = LocalState{a - 1, b + 1, c};
            break;
        case LocalKind::delta_d_upper:
            if (a >= 1 && b % 2 == 0) r = LocalState{a - 1, b + 1, c};
            else if (b % 2 == 1) r = LocalState{a, b - 1, c + 1};
            break;
        case LocalKind::delta_d_odd:
            if (b >= 1) r = LocalState{a, b - 1, c + 1};
            break;
        case LocalKind::trivial:
            break;
    }
    if (r && !local_valid(fac, *r)) return std::nullopt;
    return r;
}

std::optional<LocalState> RadCrystal::local_e(const LocalFactor& fac, const LocalState& s) const {
    // every table move shifts each entry by at most 2, so the preimage is found among nearby states
    std::optional<LocalState> found;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -2; z <= 2; ++z) {
                LocalState cand{s[0] + x, s[1] + y, s[2] + z};
                if (!local_valid(fac, cand)) continue;
                std::optional<LocalState> img = local_f(fac, cand);
                if (img && *img == s) {
                    if (found && *found != cand) throw std::logic_error("local crystal is not injective");
                    found = cand;
                }
            }
    return found;
}

std::pair<int, int> RadCrystal::local_eps_phi(const LocalFactor& fac, const LocalState& s) const {
    int eps = 0, phi = 0;
    for (std::optional<LocalState> x = local_e(fac, s); x; x = local_e(fac, *x)) ++eps;
    for (std::optional<LocalState> x = local_f(fac, s); x; x = local_f(fac, *x)) ++phi;
    return {eps, phi};
}

std::optional<RadArray> RadCrystal::act(int i, const RadArray& x, bool raise) const {
    if (i == 0) {
        RadArray y = x;
        int& v = y.c[static_cast<std::size_t>(alpha0_)];
        if (raise) {
            if (v == 0) return std::nullopt;
            --v;
        } else {
            ++v;
        }
        return y;
    }
    const std::vector<LocalFactor>& fs = factors(i);
    const Weight& am = rs_.simple_roots()[static_cast<std::size_t>(type().m)];
    const Regime reg = regime(i);
    std::vector<FactorStat> st;
    st.reserve(fs.size());
    for (const LocalFactor& fac : fs) {
        FactorStat s;
        LocalState ls = read(fac, x);
        if (reg == Regime::odd) {
            Weight w(static_cast<std::size_t>(rs_.N()), 0);
            for (int t = 0; t < 3; ++t)
                if (fac.roots[static_cast<std::size_t>(t)] >= 0)
                    w = w - ls[static_cast<std::size_t>(t)] * rs_.rad(fac.roots[static_cast<std::size_t>(t)]).weight;
            s.pairing = rs_.bilinear(w, am);
        } else {
            auto [e, p] = local_eps_phi(fac, ls);
            s.eps = e;
            s.phi = p;
        }
        st.push_back(s);
    }
    SignaturePick pick = signature_rule(reg, st);
    int k = raise ? pick.e_factor : pick.f_factor;
    if (k < 0) return std::nullopt;
    const LocalFactor& fac = fs[static_cast<std::size_t>(k)];
    std::optional<LocalState> ns = raise ? local_e(fac, read(fac, x)) : local_f(fac, read(fac, x));
    if (!ns) return std::nullopt;
    RadArray y = x;
    write(fac, *ns, y);
    return y;
}

std::optional<RadArray> RadCrystal::f(int i, const RadArray& x) const { return act(i, x, false); }
std::optional<RadArray> RadCrystal::e(int i, const RadArray& x) const { return act(i, x, true); }

std::pair<int, int> RadCrystal::eps_phi(int i, const RadArray& x) const {
    if (i == 0) return {x.c[static_cast<std::size_t>(alpha0_)], -1};
    if (regime(i) != Regime::odd) {
        std::vector<FactorStat> st;
        for (const LocalFactor& fac : factors(i)) {
            auto [e, p] = local_eps_phi(fac, read(fac, x));
            st.push_back(FactorStat{e, p, 0});
        }
        SignaturePick pick = signature_rule(regime(i), st);
        return {pick.eps, pick.phi};
    }
    return string_lengths(i, x);
}

std::pair<int, int> RadCrystal::string_lengths(int i, const RadArray& x) const {
    if (i == 0) return {x.c[static_cast<std::size_t>(alpha0_)], -1};
    int eps = 0, phi = 0;
    for (std::optional<RadArray> y = e(i, x); y; y = e(i, *y)) ++eps;
    for (std::optional<RadArray> y = f(i, x); y; y = f(i, *y)) ++phi;
    return {eps, phi};
}

std::vector<RadArray> RadCrystal::enumerate(int max_degree) const {
    std::vector<RadArray> out;
    if (max_degree < 0) return out;
    RadArray cur = zero();
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n_rad()) {
            out.push_back(cur);
            return;
        }
        const int h = ht_[static_cast<std::size_t>(k)];
        const int cap = iso_[static_cast<std::size_t>(k)] ? 1 : left / h;
        for (int v = 0; v <= cap && v * h <= left; ++v) {
            cur.c[static_cast<std::size_t>(k)] = v;
            rec(k + 1, left - v * h);
        }
        cur.c[static_cast<std::size_t>(k)] = 0;
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end(), [this](const RadArray& a, const RadArray& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a.c < b.c;
    });
    return out;
}

}  // namespace osp
