#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "sumsets/errors.hpp"

namespace sumsets {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow_checked(int128 x) {
    if (x > int128(std::numeric_limits<std::int64_t>::max()) ||
        x < int128(std::numeric_limits<std::int64_t>::min()))
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(x);
}

}  // namespace detail

/**
 * Exact rational number. Always normalized: gcd(|num|, den) = 1, den >= 1,
 * zero is 0/1. Intermediate products are taken in 128 bits and results are
 * range-checked, so arithmetic throws std::overflow_error rather than wrap.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: integers embed implicitly
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rational make(detail::int128 n, detail::int128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow_checked(n);
        r.den_ = detail::narrow_checked(d);
        return r;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                    detail::int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("rational division by zero");
        return make(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = detail::narrow_checked(-detail::int128(num_));
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ <=> detail::int128(b.num_) * a.den_;
    }

    // "num/den", denominator always written; this is the on-disk form.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "n/d" or a bare integer "n".
    static Rational parse(std::string_view s) {
        auto bad = [&] { throw parse_error("malformed rational '" + std::string(s) + "'"); };
        auto slash = s.find('/');
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1")
                                                              : s.substr(slash + 1);
        auto to_int = [&](std::string_view t) -> std::int64_t {
            if (t.empty())
                bad();
            bool neg = t.front() == '-';
            if (neg)
                t.remove_prefix(1);
            if (t.empty() || t.size() > 18)
                bad();
            std::int64_t v = 0;
            for (char ch : t) {
                if (ch < '0' || ch > '9')
                    bad();
                v = v * 10 + (ch - '0');
            }
            return neg ? -v : v;
        };
        std::int64_t n = to_int(ns);
        std::int64_t d = to_int(ds);
        if (d <= 0)
            bad();
        return Rational(n, d);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational half() { return Rational(1, 2); }

}  // namespace sumsets
