#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumsets/errors.hpp"
#include "sumsets/ordinal.hpp"
#include "sumsets/rational.hpp"

namespace sumsets {

/**
 * Finite-support vector over the rationals, indexed by ordinals below w^2.
 * Canonical form at all times: support strictly increasing, no zero
 * coefficients, empty support is the zero vector. Values are immutable once
 * built; all operations return fresh vectors.
 */
class Vector {
public:
    struct Term {
        Ordinal index;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    Vector() = default;  // zero vector

    // Builds the canonical form: sorts, merges duplicate indices, drops zeros.
    static Vector from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.index < b.index; });
        Vector v;
        for (auto& t : terms) {
            if (!v.support_.empty() && v.support_.back().index == t.index)
                v.support_.back().coeff = v.support_.back().coeff + t.coeff;
            else
                v.support_.push_back(t);
            if (v.support_.back().coeff.is_zero())
                v.support_.pop_back();
        }
        return v;
    }

    static Vector unit(Ordinal at, Rational coeff = Rational(1)) {
        return from_terms({{at, coeff}});
    }

    const std::vector<Term>& terms() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    std::size_t support_size() const { return support_.size(); }

    friend Vector operator+(const Vector& x, const Vector& y) {
        Vector r;
        r.support_.reserve(x.support_.size() + y.support_.size());
        auto a = x.support_.begin(), ae = x.support_.end();
        auto b = y.support_.begin(), be = y.support_.end();
        while (a != ae && b != be) {
            if (a->index < b->index) {
                r.support_.push_back(*a++);
            } else if (b->index < a->index) {
                r.support_.push_back(*b++);
            } else {
                Rational c = a->coeff + b->coeff;
                if (!c.is_zero())
                    r.support_.push_back({a->index, c});
                ++a;
                ++b;
            }
        }
        r.support_.insert(r.support_.end(), a, ae);
        r.support_.insert(r.support_.end(), b, be);
        return r;
    }

    friend Vector operator*(const Rational& q, const Vector& x) {
        Vector r;
        if (q.is_zero())
            return r;
        r.support_.reserve(x.support_.size());
        for (const auto& t : x.support_)
            r.support_.push_back({t.index, q * t.coeff});
        return r;
    }

    Vector operator-() const { return Rational(-1) * *this; }
    friend Vector operator-(const Vector& x, const Vector& y) { return x + (-y); }

    friend bool operator==(const Vector&, const Vector&) = default;
    friend auto operator<=>(const Vector& x, const Vector& y) {
        return x.support_ <=> y.support_;
    }

    /**
     * Canonical text encoding: semicolon-separated "q.s:num/den" terms in
     * increasing ordinal order, e.g. "0.0:3/1;0.5:-1/2;1.0:2/1". The zero
     * vector encodes as the empty string. Coloring hashes and reports key
     * off this exact string.
     */
    std::string encode() const {
        std::string out;
        for (const auto& t : support_) {
            if (!out.empty())
                out += ';';
            out += t.index.str();
            out += ':';
            out += t.coeff.str();
        }
        return out;
    }

    static Vector parse(std::string_view s) {
        Vector v;
        if (s.empty())
            return v;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto end = s.find(';', pos);
            std::string_view term = s.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                                : end - pos);
            auto colon = term.find(':');
            if (colon == std::string_view::npos)
                throw parse_error("malformed vector term '" + std::string(term) + "'");
            Ordinal idx = Ordinal::parse(term.substr(0, colon));
            Rational c = Rational::parse(term.substr(colon + 1));
            if (c.is_zero())
                throw parse_error("vector encoding carries a zero coefficient");
            if (!v.support_.empty() && !(v.support_.back().index < idx))
                throw parse_error("vector encoding indices not strictly increasing");
            v.support_.push_back({idx, c});
            if (end == std::string_view::npos)
                break;
            pos = end + 1;
        }
        return v;
    }

private:
    std::vector<Term> support_;
};

}  // namespace sumsets
