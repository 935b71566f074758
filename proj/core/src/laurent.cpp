#include "osp/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent: coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent: coefficient overflow");
    return r;
}

}  // namespace

Laurent::Laurent(std::int64_t v) {
    if (v != 0) c_.push_back(v);
}

Laurent::Laurent(const QPow& p) : low_(p.exp), c_{p.sign} {}

std::int64_t Laurent::coeff(int e) const {
    int k = e - low_;
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

void Laurent::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t z = 0;
    while (z < c_.size() && c_[z] == 0) ++z;
    if (z > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
        low_ += static_cast<int>(z);
    }
    if (c_.empty()) low_ = 0;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

void Laurent::add_scaled(const Laurent& a, const QPow& p) {
    if (a.is_zero()) return;
    int alow = a.low_ + p.exp;
    if (is_zero()) {
        low_ = alow;
        c_ = a.c_;
        if (p.sign < 0)
            for (auto& x : c_) x = -x;
        return;
    }
    int lo = std::min(low_, alow);
    int hi = std::max(high(), alow + static_cast<int>(a.c_.size()) - 1);
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), 0);
        low_ = lo;
    }
    if (static_cast<int>(c_.size()) < hi - low_ + 1) c_.resize(static_cast<std::size_t>(hi - low_ + 1), 0);
    std::size_t off = static_cast<std::size_t>(alow - low_);
    if (p.sign > 0) {
        for (std::size_t k = 0; k < a.c_.size(); ++k) c_[off + k] = checked_add(c_[off + k], a.c_[k]);
    } else {
        for (std::size_t k = 0; k < a.c_.size(); ++k) c_[off + k] = checked_add(c_[off + k], -a.c_[k]);
    }
    trim();
}

Laurent& Laurent::operator+=(const Laurent& o) {
    add_scaled(o, QPow{1, 0});
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    add_scaled(o, QPow{-1, 0});
    return *this;
}

Laurent& Laurent::operator*=(const QPow& p) {
    if (is_zero()) return *this;
    low_ += p.exp;
    if (p.sign < 0)
        for (auto& x : c_) x = -x;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

Scalar Laurent::to_scalar() const {
    std::vector<std::pair<int, mpz_class>> t;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) t.emplace_back(low_ + static_cast<int>(k), mpz_class(static_cast<long>(c_[k])));
    return Scalar::from_terms(t, {{0, mpz_class(1)}});
}

std::int64_t Laurent::content() const {
    std::int64_t g = 0;
    for (auto x : c_) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

std::size_t Laurent::hash() const {
    std::size_t h = std::hash<int>()(low_);
    for (auto x : c_) h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace osp
