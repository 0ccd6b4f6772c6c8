#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "sumsets/errors.hpp"

namespace sumsets {

inline constexpr int kStar = -1;

/**
 * Combinatorial line over an alphabet of p symbols: a word of fixed length
 * whose entries are symbol indices in [0, p) or kStar, with at least one
 * star. Substituting each symbol for every star yields the line's p points.
 * Star positions are the active coordinates; the rest are inactive and hold
 * their constant symbol.
 */
struct Line {
    std::vector<int> word;

    std::size_t length() const { return word.size(); }

    std::vector<int> active_positions() const {
        std::vector<int> j;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] == kStar)
                j.push_back(static_cast<int>(i));
        return j;
    }

    // Positions holding constant symbol `sym`.
    std::vector<int> inactive_positions(int sym) const {
        std::vector<int> j;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] == sym)
                j.push_back(static_cast<int>(i));
        return j;
    }

    // The point with every star replaced by `sym`.
    std::vector<int> point(int sym) const {
        std::vector<int> w = word;
        for (int& x : w)
            if (x == kStar)
                x = sym;
        return w;
    }

    friend bool operator==(const Line&, const Line&) = default;
};

inline std::vector<std::vector<int>> line_points(const Line& line, int alphabet_size) {
    std::vector<std::vector<int>> pts;
    pts.reserve(static_cast<std::size_t>(alphabet_size));
    for (int sym = 0; sym < alphabet_size; ++sym)
        pts.push_back(line.point(sym));
    return pts;
}

// Word order used everywhere lines are compared: entrywise, symbols by index,
// star after every symbol.
inline bool line_word_less(const std::vector<int>& a, const std::vector<int>& b) {
    auto rank = [](int x) { return x == kStar ? std::numeric_limits<int>::max() : x; };
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (rank(a[i]) != rank(b[i]))
            return rank(a[i]) < rank(b[i]);
    }
    return a.size() < b.size();
}

/**
 * Exhaustive search for a monochromatic combinatorial line at fixed word
 * length. Candidates are all (p+1)^N - p^N words over the alphabet plus
 * star, enumerated in lexicographic order with star last; the first line
 * whose p points share a color wins. Absence at this length is a valid
 * answer, reported as nullopt.
 */
inline std::optional<Line> find_monochromatic_line(
    int alphabet_size, int length,
    const std::function<int(const std::vector<int>&)>& word_color) {
    if (alphabet_size < 1 || length < 1)
        throw std::invalid_argument("line search needs alphabet_size >= 1 and length >= 1");

    const int base = alphabet_size + 1;  // digit alphabet_size encodes the star
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    while (true) {
        bool has_star = false;
        for (int d : digits)
            has_star |= d == alphabet_size;
        if (has_star) {
            Line line;
            line.word.reserve(digits.size());
            for (int d : digits)
                line.word.push_back(d == alphabet_size ? kStar : d);
            int first = word_color(line.point(0));
            bool mono = true;
            for (int sym = 1; sym < alphabet_size && mono; ++sym)
                mono = word_color(line.point(sym)) == first;
            if (mono)
                return line;
        }
        // next word in lex order (leftmost digit most significant)
        int pos = length - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == base - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            return std::nullopt;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace sumsets
