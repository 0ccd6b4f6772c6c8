#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumsets/coloring.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/hashing.hpp"
#include "sumsets/ordinal.hpp"
#include "sumsets/pattern.hpp"
#include "sumsets/vector.hpp"

namespace sumsets {

/**
 * A finite pattern set padded to common length r = max length: each pattern
 * gains r - len leading zeros. Instantiating a padded pattern on an
 * increasing r-tuple of basis indices spends the zeros on the low indices,
 * so every source pattern can be read off any r-tuple's upper part.
 */
struct PaddedPatternSet {
    int r = 0;
    std::vector<Pattern> sources;                // sorted, deduplicated
    std::vector<std::vector<Rational>> padded;   // aligned with sources; zeros allowed

    std::size_t size() const { return sources.size(); }
};

inline PaddedPatternSet pad_patterns(std::vector<Pattern> pi) {
    if (pi.empty())
        throw std::invalid_argument("pad_patterns needs a nonempty pattern set");
    std::sort(pi.begin(), pi.end());
    pi.erase(std::unique(pi.begin(), pi.end()), pi.end());

    PaddedPatternSet out;
    for (const auto& p : pi)
        out.r = std::max(out.r, static_cast<int>(p.length()));
    out.sources = std::move(pi);
    for (const auto& p : out.sources) {
        std::vector<Rational> row(static_cast<std::size_t>(out.r), Rational(0));
        std::copy(p.entries().begin(), p.entries().end(),
                  row.end() - static_cast<std::ptrdiff_t>(p.length()));
        out.padded.push_back(std::move(row));
    }
    return out;
}

// Strips the leading zeros back off a padded row.
inline Pattern unpad(const std::vector<Rational>& row) {
    auto first = std::find_if(row.begin(), row.end(),
                              [](const Rational& q) { return !q.is_zero(); });
    return Pattern(std::vector<Rational>(first, row.end()));
}

// Vector with coefficient row[j] at basis index s[j]; zero entries drop out.
inline Vector instantiate(std::span<const Rational> row, std::span<const Ordinal> s) {
    if (row.size() != s.size())
        throw std::invalid_argument("instantiate: tuple size does not match padded length");
    std::vector<Vector::Term> terms;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0 && !(s[j - 1] < s[j]))
            throw std::invalid_argument("instantiate: tuple not strictly increasing");
        if (!row[j].is_zero())
            terms.push_back({s[j], row[j]});
    }
    return Vector::from_terms(std::move(terms));
}

// Tuple of colors of all padded patterns instantiated on s, in source order.
inline std::vector<int> product_color(const ColoringSpec& c, const PaddedPatternSet& pp,
                                      std::span<const Ordinal> s) {
    std::vector<int> colors;
    colors.reserve(pp.size());
    for (const auto& row : pp.padded)
        colors.push_back(color_vector(c, instantiate(row, s)));
    return colors;
}

struct ReductionStats {
    std::uint64_t nodes = 0;    // partial candidate sets visited
    std::uint64_t prunes = 0;   // subtrees cut on a mismatched r-subset
    std::uint64_t tuples_evaluated = 0;  // distinct r-subsets colored
};

struct InstantiationRecord {
    Pattern source;
    std::vector<Ordinal> tuple;
    int color = 0;
};

struct ReductionResult {
    std::vector<Ordinal> a;          // increasing, |a| = target
    std::map<Pattern, int> color_map;
    std::vector<InstantiationRecord> witness_certificate;
    ReductionStats stats;
};

/**
 * Exhaustive certificate check: every source pattern instantiated on every
 * increasing tuple from `a` must land on its mapped color. This is the
 * invariant a ReductionResult promises, checked by re-instantiation and not
 * by trusting the search. Returns the full list of checked instantiations.
 */
inline std::vector<InstantiationRecord> verify_reduction(const ColoringSpec& c,
                                                         const std::vector<Pattern>& pi,
                                                         std::span<const Ordinal> a,
                                                         const std::map<Pattern, int>& color_map) {
    std::vector<InstantiationRecord> records;
    for (const auto& p : pi) {
        auto it = color_map.find(p);
        if (it == color_map.end())
            throw verification_error("color map misses pattern " + p.str());
        const int want = it->second;
        const std::size_t len = p.length();
        if (len > a.size())
            throw verification_error("pattern longer than the homogeneous set");

        std::vector<std::size_t> idx(len);
        for (std::size_t j = 0; j < len; ++j)
            idx[j] = j;
        while (true) {
            std::vector<Ordinal> tuple;
            tuple.reserve(len);
            for (std::size_t j : idx)
                tuple.push_back(a[j]);
            std::vector<Vector::Term> terms;
            for (std::size_t j = 0; j < len; ++j)
                terms.push_back({tuple[j], p[j]});
            int got = color_vector(c, Vector::from_terms(std::move(terms)));
            if (got != want)
                throw verification_error("instantiation of " + p.str() + " off-color");
            records.push_back({p, std::move(tuple), got});

            // next increasing index tuple
            std::size_t j = len;
            while (j > 0 && idx[j - 1] == a.size() - len + (j - 1))
                --j;
            if (j == 0)
                break;
            ++idx[j - 1];
            for (std::size_t t = j; t < len; ++t)
                idx[t] = idx[t - 1] + 1;
        }
    }
    return records;
}

namespace detail {

struct IndexTupleHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = kFnvBasis;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 1;
            h *= kFnvPrime;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

/**
 * Searches the basis prefix e_0..e_{B-1} for a set A' of size target + r all
 * of whose r-subsets share one product-color tuple, removes the r least
 * elements, and returns the rest as A together with the color each source
 * pattern takes on A.
 *
 * Candidates are enumerated in colexicographic order (largest element grows
 * last), pruning a branch as soon as one r-subset disagrees, so the returned
 * A' is the colex-first homogeneous set and in particular the one confined
 * to the shortest basis prefix. Tuples are interned and memoized; the result
 * is re-verified by exhaustive instantiation before it is returned.
 *
 * There is no finite bound tying B to guaranteed success for an arbitrary
 * coloring; running out of prefix throws search_exhausted.
 */
inline ReductionResult find_homogeneous_set(const ColoringSpec& c, std::vector<Pattern> pi,
                                            int basis_size, int target) {
    PaddedPatternSet pp = pad_patterns(std::move(pi));
    const int r = pp.r;
    const int m = target;
    if (m < r)
        throw std::invalid_argument("find_homogeneous_set needs target >= r");
    if (basis_size < m + r)
        throw std::invalid_argument("find_homogeneous_set needs basis_size >= target + r");

    ReductionStats stats;

    // Tuple id of an increasing r-subset of basis indices, memoized.
    std::unordered_map<std::vector<int>, int, detail::IndexTupleHash> tuple_id;
    std::map<std::vector<int>, int> interned;  // color tuple -> id
    auto id_of = [&](const std::vector<int>& subset) {
        auto it = tuple_id.find(subset);
        if (it != tuple_id.end())
            return it->second;
        std::vector<Ordinal> s;
        s.reserve(subset.size());
        for (int i : subset)
            s.push_back(basis_index(i));
        std::vector<int> colors = product_color(c, pp, s);
        ++stats.tuples_evaluated;
        int id = static_cast<int>(interned.size());
        auto [pos, fresh] = interned.emplace(std::move(colors), id);
        if (!fresh)
            id = pos->second;
        tuple_id.emplace(subset, id);
        return id;
    };

    const std::size_t n = static_cast<std::size_t>(m + r);
    std::vector<int> chosen;  // decreasing while building: a_n, a_{n-1}, ...
    std::optional<int> want;  // tuple id fixed by the top r elements
    std::vector<int> found;

    // Colex DFS: the largest element ranges first, each further element is
    // smaller, every position iterated in ascending order. The first complete
    // candidate is the colex-least homogeneous A'.
    auto dfs = [&](auto&& self, int upper) -> bool {
        const std::size_t depth = chosen.size();
        const int slots_left = static_cast<int>(n - depth);
        for (int v = slots_left - 1; v < upper; ++v) {
            ++stats.nodes;
            chosen.push_back(v);
            bool ok = true;
            std::optional<int> saved = want;
            if (chosen.size() >= static_cast<std::size_t>(r)) {
                // All r-subsets containing v lie inside the chosen suffix.
                std::vector<bool> take(chosen.size() - 1, false);
                std::fill(take.begin(), take.begin() + (r - 1), true);
                // chosen is stored descending; iterate (r-1)-subsets of it.
                std::vector<int> subset(static_cast<std::size_t>(r));
                do {
                    std::size_t out = 1;
                    subset[0] = v;
                    for (std::size_t t = 0; t < take.size(); ++t)
                        if (take[t])
                            subset[out++] = chosen[t];
                    std::sort(subset.begin(), subset.end());
                    int id = id_of(subset);
                    if (!want) {
                        want = id;
                    } else if (id != *want) {
                        ok = false;
                        ++stats.prunes;
                        break;
                    }
                } while (std::prev_permutation(take.begin(), take.end()));
            }
            if (ok) {
                if (chosen.size() == n) {
                    found = chosen;
                    return true;
                }
                if (self(self, v))
                    return true;
            }
            chosen.pop_back();
            want = saved;
        }
        return false;
    };

    if (!dfs(dfs, basis_size)) {
        throw search_exhausted("insufficient basis size B=" + std::to_string(basis_size) +
                               ": no homogeneous set of size " + std::to_string(m + r) +
                               " in the prefix");
    }

    std::sort(found.begin(), found.end());
    ReductionResult result;
    result.stats = stats;
    for (std::size_t i = static_cast<std::size_t>(r); i < found.size(); ++i)
        result.a.push_back(basis_index(found[i]));

    // Colors read off the constant tuple, keyed by source pattern.
    std::vector<Ordinal> probe;
    for (int i = 0; i < r; ++i)
        probe.push_back(basis_index(found[static_cast<std::size_t>(i)]));
    std::vector<int> tuple = product_color(c, pp, probe);
    for (std::size_t i = 0; i < pp.size(); ++i)
        result.color_map.emplace(pp.sources[i], tuple[i]);

    result.witness_certificate = verify_reduction(c, pp.sources, result.a, result.color_map);
    return result;
}

}  // namespace sumsets
