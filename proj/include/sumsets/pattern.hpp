#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumsets/errors.hpp"
#include "sumsets/rational.hpp"
#include "sumsets/vector.hpp"

namespace sumsets {

/**
 * Pattern: the nonempty sequence of nonzero coefficients of a vector read in
 * increasing basis order, zeros deleted. Two vectors share a pattern exactly
 * when their coefficient lists agree after that deletion.
 */
class Pattern {
public:
    explicit Pattern(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::domain_error("pattern must be nonempty");
        for (const auto& e : entries_)
            if (e.is_zero())
                throw std::domain_error("pattern entries must be nonzero");
    }

    Pattern(std::initializer_list<Rational> entries)
        : Pattern(std::vector<Rational>(entries)) {}

    const std::vector<Rational>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern& a, const Pattern& b) {
        return a.entries_ <=> b.entries_;
    }

    // "num/den,num/den,..." -- the hashing and report form.
    std::string str() const {
        std::string out;
        for (const auto& e : entries_) {
            if (!out.empty())
                out += ',';
            out += e.str();
        }
        return out;
    }

    static Pattern parse(std::string_view s) {
        std::vector<Rational> entries;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto end = s.find(',', pos);
            auto piece = s.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                     : end - pos);
            entries.push_back(Rational::parse(piece));
            if (end == std::string_view::npos)
                break;
            pos = end + 1;
        }
        return Pattern(std::move(entries));
    }

private:
    std::vector<Rational> entries_;
};

// Reads the pattern off a nonzero vector.
inline Pattern pattern(const Vector& x) {
    if (x.is_zero())
        throw std::domain_error("pattern undefined for zero vector");
    std::vector<Rational> entries;
    entries.reserve(x.support_size());
    for (const auto& t : x.terms())
        entries.push_back(t.coeff);
    return Pattern(std::move(entries));
}

// Joins entry sequences in order; length adds up.
inline Pattern concat(std::span<const Pattern> ps) {
    if (ps.empty())
        throw std::domain_error("concat of empty pattern sequence");
    std::vector<Rational> entries;
    for (const auto& p : ps)
        entries.insert(entries.end(), p.entries().begin(), p.entries().end());
    return Pattern(std::move(entries));
}

inline Pattern concat(std::initializer_list<Pattern> ps) {
    return concat(std::span<const Pattern>(ps.begin(), ps.size()));
}

// A vector with the given pattern laid out on fresh increasing ordinals
// (w*limit_part + offset, offset+1, ...). Any increasing layout would do for
// a pattern-determined coloring; this fixes one deterministically.
inline Vector pattern_witness(const Pattern& p, int limit_part = 0, int offset = 0) {
    std::vector<Vector::Term> terms;
    terms.reserve(p.length());
    for (std::size_t j = 0; j < p.length(); ++j)
        terms.push_back({Ordinal{limit_part, offset + static_cast<int>(j)}, p[j]});
    return Vector::from_terms(std::move(terms));
}

}  // namespace sumsets
