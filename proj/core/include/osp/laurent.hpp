#pragma once

#include "osp/scalar.hpp"

#include <cstdint>
#include <vector>

namespace osp {

// Laurent polynomial in q with machine-integer coefficients, used by the shuffle
// engine where every structure constant is +-q^k. Overflow throws.
class Laurent {
public:
    Laurent() = default;
    Laurent(std::int64_t v);  // NOLINT(google-explicit-constructor)
    Laurent(const QPow& p);   // NOLINT(google-explicit-constructor)

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int e) const;
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const QPow& p);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const QPow& p) { return a *= p; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // accumulate a * p
    void add_scaled(const Laurent& a, const QPow& p);

    Scalar to_scalar() const;
    // nonzero content gcd of coefficients and lowest exponent
    std::int64_t content() const;
    std::size_t hash() const;

private:
    int low_ = 0;
    std::vector<std::int64_t> c_;
    void trim();
};

}  // namespace osp
