#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumsets/errors.hpp"
#include "sumsets/hashing.hpp"

namespace sumsets {

// Finite coloring of an integer range.
struct IntColoring {
    int k = 1;
    std::function<int(std::int64_t)> at;
};

// floor(log2 n) mod 3. Any set whose sumset stays inside one class is forced
// to be short on doublings; how short is an empirical question, measured by
// max_mono_sumset below rather than assumed.
inline int doubling_coloring(std::int64_t n) {
    if (n <= 0)
        throw std::domain_error("doubling coloring needs n >= 1");
    return static_cast<int>((std::bit_width(static_cast<std::uint64_t>(n)) - 1) % 3);
}

inline IntColoring doubling_int_coloring() {
    return {3, [](std::int64_t n) { return doubling_coloring(n); }};
}

inline IntColoring parity_int_coloring() {
    return {2, [](std::int64_t n) { return static_cast<int>(n & 1); }};
}

inline IntColoring seeded_int_coloring(std::uint64_t seed, int k) {
    return {k, [seed, k](std::int64_t n) {
                return seeded_int_color(seed, k, static_cast<std::uint64_t>(n));
            }};
}

struct SumsetSearchResult {
    std::vector<std::int64_t> best_x;  // increasing
    int best_size = 0;
    int color = 0;        // shared color of every sum x+y, x,y in best_x
    bool exhaustive = false;
    std::uint64_t nodes = 0;
};

namespace detail {

// Sorted-sequence lexicographic order, the tie-break rule everywhere.
inline bool lex_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/**
 * Maximum-cardinality X in [1, M] (capped at size_cap) whose full sumset
 * {x + y : x, y in X}, doubles included, is monochromatic.
 *
 * Search: per color class, branch-and-bound over candidates in increasing
 * numeric order, include-first. That discovery order makes the first set of
 * each new size the lexicographically least one, so strict-improvement
 * tracking realizes the documented tie-break (largest size, then lex-least X)
 * without any post-processing. Colors are searched independently and merged
 * under the same rule.
 *
 * `exhaustive` is true when every color class was fully explored; reaching
 * size_cap stops the search early and clears the flag, except in the
 * settled case best_size == M.
 */
inline SumsetSearchResult max_mono_sumset(const IntColoring& c, std::int64_t M,
                                          std::int64_t size_cap) {
    if (M < 1)
        throw std::invalid_argument("max_mono_sumset needs M >= 1");
    if (size_cap < 1)
        throw std::invalid_argument("max_mono_sumset needs size_cap >= 1");

    // c must be defined on [2, 2M]; evaluate once.
    std::vector<int> color_of(2 * M + 1, 0);
    for (std::int64_t n = 2; n <= 2 * M; ++n) {
        int col = c.at(n);
        if (col < 0 || col >= c.k)
            throw std::domain_error("integer coloring value out of [0,k) at n=" + std::to_string(n));
        color_of[static_cast<std::size_t>(n)] = col;
    }

    SumsetSearchResult result;
    bool cap_stop = false;

    for (int col = 0; col < c.k && !cap_stop; ++col) {
        std::vector<std::int64_t> candidates;
        for (std::int64_t n = 1; n <= M; ++n)
            if (color_of[static_cast<std::size_t>(2 * n)] == col)
                candidates.push_back(n);
        if (candidates.empty())
            continue;

        std::vector<std::int64_t> current, best_local;
        std::uint64_t nodes = 0;

        // Include-first DFS; each level extends by a strictly larger candidate.
        auto dfs = [&](auto&& self, std::size_t from) -> void {
            if (cap_stop)
                return;
            for (std::size_t i = from; i < candidates.size(); ++i) {
                if (current.size() + (candidates.size() - i) <= best_local.size())
                    return;  // cannot strictly beat the local best
                std::int64_t v = candidates[i];  // 2v already matches col
                bool ok = true;
                for (std::int64_t u : current) {
                    if (color_of[static_cast<std::size_t>(u + v)] != col) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
                ++nodes;
                current.push_back(v);
                if (current.size() > best_local.size()) {
                    best_local = current;
                    if (static_cast<std::int64_t>(best_local.size()) >= size_cap) {
                        cap_stop = true;
                        current.pop_back();
                        return;
                    }
                }
                self(self, i + 1);
                current.pop_back();
                if (cap_stop)
                    return;
            }
        };
        dfs(dfs, 0);
        result.nodes += nodes;

        bool better = static_cast<int>(best_local.size()) > result.best_size ||
                      (static_cast<int>(best_local.size()) == result.best_size &&
                       !best_local.empty() && detail::lex_less(best_local, result.best_x));
        if (better) {
            result.best_x = best_local;
            result.best_size = static_cast<int>(best_local.size());
            result.color = col;
        }
    }

    result.exhaustive = !cap_stop || result.best_size == static_cast<int>(M);

    // The contract promises a checked certificate: re-verify before returning.
    for (std::size_t i = 0; i < result.best_x.size(); ++i)
        for (std::size_t j = i; j < result.best_x.size(); ++j)
            if (color_of[static_cast<std::size_t>(result.best_x[i] + result.best_x[j])] !=
                result.color)
                throw verification_error("max_mono_sumset produced a non-monochromatic set");
    return result;
}

}  // namespace sumsets
