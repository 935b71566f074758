#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace osp {

// Dense polynomial in q with integer coefficients; c[k] is the coefficient of q^k.
class Poly {
public:
    Poly() = default;
    explicit Poly(long v);
    explicit Poly(const mpz_class& v);
    static Poly monomial(const mpz_class& coeff, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const mpz_class& coeff(int k) const;
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    // index of the lowest nonzero coefficient; 0 for the zero polynomial
    int low_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpz_class& k);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly shifted(int k) const;           // multiply by q^k (k >= 0) or divide (k < 0, exact)
    mpz_class content() const;           // nonnegative gcd of coefficients
    Poly divexact(const mpz_class& k) const;
    // exact division; throws if b does not divide *this over Z
    Poly divexact(const Poly& b) const;
    Poly primitive() const;
    Poly substitute_neg() const;         // p(-q)
    Poly reversed(int deg) const;        // q^deg p(1/q)

    static Poly gcd(const Poly& a, const Poly& b);

private:
    std::vector<mpz_class> c_;
    void trim();
    friend class Scalar;
};

// One-sided sign-and-power factor +-q^e, used for the biadditive twist values.
struct QPow {
    int sign = 1;
    int exp = 0;
    QPow operator*(const QPow& o) const { return {sign * o.sign, exp + o.exp}; }
    QPow inv() const { return {sign, -exp}; }
    QPow pow(long k) const { return {(k % 2 != 0) ? sign : 1, static_cast<int>(exp * k)}; }
    bool operator==(const QPow& o) const { return sign == o.sign && exp == o.exp; }
};

// q-adic order; nullopt encodes +infinity (the zero element).
using Valuation = std::optional<int>;

// Element of Q(q): q^shift * num / den with num(0) != 0, den(0) > 0 side-normalised,
// gcd(num, den) = 1 over Z, den with positive leading coefficient.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpz_class& v);
    explicit Scalar(const mpq_class& v);
    Scalar(const QPow& p);  // NOLINT(google-explicit-constructor)
    static Scalar q_pow(int e, long coeff = 1);
    static Scalar q() { return q_pow(1); }
    // Laurent polynomial from (exponent, coefficient) pairs
    static Scalar laurent(const std::vector<std::pair<int, long>>& terms);
    static Scalar from_parts(int shift, Poly num, Poly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar& operator*=(const QPow& p);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator*(Scalar a, const QPow& p) { return a *= p; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    Scalar inv() const;
    Scalar pow(int k) const;

    Valuation valuation() const;
    bool in_A0() const { return is_zero() || shift_ >= 0; }
    mpq_class mod_q() const;  // value at q = 0, requires valuation >= 0
    // leading coefficient at q = 0 after removing q^valuation
    mpq_class lowest_coefficient() const;
    // substitution q -> -q^{-1}
    Scalar omega() const;
    // substitution q -> q^{-1}
    Scalar bar() const;

    int shift() const { return shift_; }
    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    std::size_t size_hint() const;
    std::size_t hash() const;

    std::string to_string() const;
    // Laurent terms (exponent, coefficient) of q^shift*num and of den
    std::vector<std::pair<int, mpz_class>> num_terms() const;
    std::vector<std::pair<int, mpz_class>> den_terms() const;
    static Scalar from_terms(const std::vector<std::pair<int, mpz_class>>& num,
                             const std::vector<std::pair<int, mpz_class>>& den);

private:
    int shift_ = 0;
    Poly num_;
    Poly den_{1};
    void canonicalize();
};

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// [s]_{q^d}
Scalar q_int(int s, int d = 1);
// {s}_{q^d}
Scalar q_odd_int(int s, int d = 1);
Scalar q_int_fact(int s, int d = 1);
Scalar q_odd_int_fact(int s, int d = 1);

}  // namespace osp
