#include "osp/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace osp {

namespace {
const mpz_class kZero(0);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long v) {
    if (v != 0) c_.emplace_back(v);
}

Poly::Poly(const mpz_class& v) {
    if (v != 0) c_.push_back(v);
}

Poly Poly::monomial(const mpz_class& coeff, int deg) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, kZero);
    p.c_[static_cast<std::size_t>(deg)] = coeff;
    return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const mpz_class& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

int Poly::low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return 0;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpz_class& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    Poly r;
    if (is_zero()) return r;
    if (k >= 0) {
        r.c_.assign(static_cast<std::size_t>(k), kZero);
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    if (low_degree() < -k) throw std::logic_error("Poly::shifted: inexact division by q");
    r.c_.assign(c_.begin() + (-k), c_.end());
    return r;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divexact(const mpz_class& k) const {
    Poly r = *this;
    if (k == 1) return r;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

Poly Poly::divexact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("Poly::divexact: division by zero");
    if (b.degree() == 0) {
        Poly r = *this;
        for (auto& x : r.c_) {
            if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
                throw std::logic_error("Poly::divexact: inexact");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
        }
        return r;
    }
    Poly r = *this;
    Poly quo;
    if (r.degree() < b.degree()) {
        if (r.is_zero()) return quo;
        throw std::logic_error("Poly::divexact: inexact");
    }
    quo.c_.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), kZero);
    const mpz_class& lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int s = r.degree() - b.degree();
        if (!mpz_divisible_p(r.lead().get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("Poly::divexact: inexact");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), r.lead().get_mpz_t(), lb.get_mpz_t());
        quo.c_[static_cast<std::size_t>(s)] = t;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_submul(r.c_[j + static_cast<std::size_t>(s)].get_mpz_t(), t.get_mpz_t(),
                       b.c_[j].get_mpz_t());
        r.trim();
    }
    if (!r.is_zero()) throw std::logic_error("Poly::divexact: inexact");
    quo.trim();
    return quo;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    Poly r = divexact(g);
    if (r.lead() < 0) r = -r;
    return r;
}

Poly Poly::substitute_neg() const {
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Poly Poly::reversed(int deg) const {
    Poly r;
    if (is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(deg) + 1, kZero);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[static_cast<std::size_t>(deg) - k] = c_[k];
    r.trim();
    return r;
}

namespace {

// remainder of a by b up to a nonzero integer factor
Poly pseudo_rem(Poly a, const Poly& b) {
    const mpz_class& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int s = a.degree() - b.degree();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), a.lead().get_mpz_t());
        mpz_class fa = lb / g;
        mpz_class fb = a.lead() / g;
        a *= fa;
        Poly t = b.shifted(s);
        t *= fb;
        a -= t;
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : (b.lead() < 0 ? -b : b);
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    mpz_class ca = a.content(), cb = b.content(), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return Poly(cg);
    Poly pa = a.divexact(ca), pb = b.divexact(cb);
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    while (true) {
        if (pb.degree() == 0) return Poly(cg);
        Poly r = pseudo_rem(pa, pb);
        if (r.is_zero()) break;
        pa = std::move(pb);
        pb = r.primitive();
    }
    Poly g = pb.primitive();
    g *= cg;
    return g;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long v) : num_(v) {}

Scalar::Scalar(const mpz_class& v) : num_(v) {}

Scalar::Scalar(const mpq_class& v) : num_(v.get_num()), den_(v.get_den()) {}

Scalar::Scalar(const QPow& p) : shift_(p.exp), num_(static_cast<long>(p.sign)) {}

Scalar Scalar::q_pow(int e, long coeff) {
    Scalar s;
    if (coeff == 0) return s;
    s.num_ = Poly(coeff);
    s.shift_ = e;
    return s;
}

Scalar Scalar::laurent(const std::vector<std::pair<int, long>>& terms) {
    std::vector<std::pair<int, mpz_class>> t;
    t.reserve(terms.size());
    for (const auto& [e, c] : terms) t.emplace_back(e, mpz_class(c));
    return from_terms(t, {{0, mpz_class(1)}});
}

Scalar Scalar::from_parts(int shift, Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
    Scalar s;
    s.shift_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

Scalar Scalar::from_terms(const std::vector<std::pair<int, mpz_class>>& num,
                          const std::vector<std::pair<int, mpz_class>>& den) {
    auto build = [](const std::vector<std::pair<int, mpz_class>>& t, int& lo) {
        lo = std::numeric_limits<int>::max();
        for (const auto& [e, c] : t)
            if (c != 0) lo = std::min(lo, e);
        Poly p;
        if (lo == std::numeric_limits<int>::max()) {
            lo = 0;
            return p;
        }
        for (const auto& [e, c] : t) {
            if (c == 0) continue;
            p += Poly::monomial(c, e - lo);
        }
        return p;
    };
    int ln = 0, ld = 0;
    Poly n = build(num, ln);
    Poly d = build(den, ld);
    return from_parts(ln - ld, std::move(n), std::move(d));
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly(1);
        return;
    }
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    int ln = num_.low_degree();
    if (ln > 0) {
        num_ = num_.shifted(-ln);
        shift_ += ln;
    }
    int ld = den_.low_degree();
    if (ld > 0) {
        den_ = den_.shifted(-ld);
        shift_ -= ld;
    }
    if (!den_.is_one()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

bool Scalar::is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int e = std::min(shift_, o.shift_);
    if (den_.is_one() && o.den_.is_one()) {
        Poly n = num_.shifted(shift_ - e);
        n += o.num_.shifted(o.shift_ - e);
        num_ = std::move(n);
        shift_ = e;
        canonicalize();
        return *this;
    }
    if (den_ == o.den_) {
        Poly n = num_.shifted(shift_ - e);
        n += o.num_.shifted(o.shift_ - e);
        num_ = std::move(n);
        shift_ = e;
        canonicalize();
        return *this;
    }
    Poly n = (num_ * o.den_).shifted(shift_ - e);
    n += (o.num_ * den_).shifted(o.shift_ - e);
    num_ = std::move(n);
    den_ = den_ * o.den_;
    shift_ = e;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly n1 = g1.is_one() ? num_ : num_.divexact(g1);
    Poly d2 = g1.is_one() ? o.den_ : o.den_.divexact(g1);
    Poly n2 = g2.is_one() ? o.num_ : o.num_.divexact(g2);
    Poly d1 = g2.is_one() ? den_ : den_.divexact(g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar& Scalar::operator*=(const QPow& p) {
    if (is_zero()) return *this;
    shift_ += p.exp;
    if (p.sign < 0) num_ = -num_;
    return *this;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    Scalar r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Valuation Scalar::valuation() const {
    if (is_zero()) return std::nullopt;
    return shift_;
}

mpq_class Scalar::lowest_coefficient() const {
    if (is_zero()) return mpq_class(0);
    mpq_class r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
}

mpq_class Scalar::mod_q() const {
    if (is_zero()) return mpq_class(0);
    if (shift_ < 0) throw std::domain_error("mod_q: not in A0");
    if (shift_ > 0) return mpq_class(0);
    return lowest_coefficient();
}

Scalar Scalar::omega() const {
    if (is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.substitute_neg().reversed(dn);
    Poly d = den_.substitute_neg().reversed(dd);
    if (shift_ % 2 != 0) n = -n;
    return from_parts(-shift_ - dn + dd, std::move(n), std::move(d));
}

Scalar Scalar::bar() const {
    if (is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree();
    return from_parts(-shift_ - dn + dd, num_.reversed(dn), den_.reversed(dd));
}

std::size_t Scalar::size_hint() const {
    std::size_t s = 0;
    for (const auto& x : num_.coeffs()) s += mpz_size(x.get_mpz_t()) + 1;
    for (const auto& x : den_.coeffs()) s += mpz_size(x.get_mpz_t()) + 1;
    return s;
}

std::size_t Scalar::hash() const {
    std::size_t h = std::hash<int>()(shift_);
    auto mix = [&h](const Poly& p) {
        for (const auto& x : p.coeffs()) {
            std::size_t v = mpz_size(x.get_mpz_t()) == 0 ? 0 : mpz_getlimbn(x.get_mpz_t(), 0);
            v ^= static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 2);
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        h ^= 0x51ed270b27u + (h << 6) + (h >> 2);
    };
    mix(num_);
    mix(den_);
    return h;
}

std::vector<std::pair<int, mpz_class>> Scalar::num_terms() const {
    std::vector<std::pair<int, mpz_class>> t;
    const auto& c = num_.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) t.emplace_back(shift_ + static_cast<int>(k), c[k]);
    return t;
}

std::vector<std::pair<int, mpz_class>> Scalar::den_terms() const {
    std::vector<std::pair<int, mpz_class>> t;
    const auto& c = den_.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) t.emplace_back(static_cast<int>(k), c[k]);
    return t;
}

namespace {

std::string laurent_string(const std::vector<std::pair<int, mpz_class>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
    std::string n = laurent_string(num_terms());
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + laurent_string(den_terms()) + ")";
}

// ---------------------------------------------------------------- q-numbers

Scalar q_int(int s, int d) {
    if (s < 0 || d < 1) throw std::invalid_argument("q_int: need s >= 0, d >= 1");
    std::vector<std::pair<int, long>> t;
    for (int k = 0; k < s; ++k) t.emplace_back(d * (s - 1 - 2 * k), 1);
    return Scalar::laurent(t);
}

Scalar q_odd_int(int s, int d) {
    if (s < 0 || d < 1) throw std::invalid_argument("q_odd_int: need s >= 0, d >= 1");
    std::vector<std::pair<int, long>> t;
    for (int k = 0; k < s; ++k) t.emplace_back(d * (s - 1 - 2 * k), ((s - 1 - k) % 2 == 0) ? 1 : -1);
    return Scalar::laurent(t);
}

Scalar q_int_fact(int s, int d) {
    Scalar r(1);
    for (int k = 2; k <= s; ++k) r *= q_int(k, d);
    return r;
}

Scalar q_odd_int_fact(int s, int d) {
    Scalar r(1);
    for (int k = 2; k <= s; ++k) r *= q_odd_int(k, d);
    return r;
}

}  // namespace osp
