#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sumsets/coloring.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/lines.hpp"
#include "sumsets/ordinal.hpp"
#include "sumsets/pattern.hpp"
#include "sumsets/vector.hpp"

namespace sumsets {

// ---------------------------------------------------------------------------
// Pair construction: X with X+X monochromatic.
// ---------------------------------------------------------------------------

/**
 * The k+1 candidate patterns a pairwise sum can take: the a-th is a twos
 * followed by 2(k-a) ones, for a = 0..k. A distinct sum of two generators
 * realizes the a-th, a doubled generator the b-th of whichever (a, b) the
 * construction below is planned with.
 */
inline std::vector<Pattern> pair_sum_patterns(int k) {
    if (k < 1)
        throw std::invalid_argument("pair_sum_patterns needs k >= 1");
    std::vector<Pattern> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int a = 0; a <= k; ++a) {
        std::vector<Rational> entries;
        entries.reserve(static_cast<std::size_t>(2 * k - a));
        for (int i = 0; i < a; ++i)
            entries.push_back(Rational(2));
        for (int i = 0; i < 2 * (k - a); ++i)
            entries.push_back(Rational(1));
        out.emplace_back(std::move(entries));
    }
    return out;
}

// Least (a, b), a < b, with colors[a] == colors[b]. A list of k+1 colors
// drawn from k values always has one.
inline std::pair<int, int> pigeonhole_pair(const std::vector<int>& colors) {
    for (std::size_t a = 0; a < colors.size(); ++a)
        for (std::size_t b = a + 1; b < colors.size(); ++b)
            if (colors[a] == colors[b])
                return {static_cast<int>(a), static_cast<int>(b)};
    throw std::logic_error("pigeonhole_pair: no repeated color in list");
}

/**
 * Plan for the pair construction at a chosen collision (a, b): generators
 *
 *   x_i = sum of the first a finite basis vectors
 *       + one basis vector at offset i in each of the b-a variable stretches
 *       + 1/2 on the first 2(k-b) offsets of one final fixed stretch.
 *
 * Every x_i + x_j then has the a-th candidate pattern when i != j and the
 * b-th when i = j, exactly. stretch_length truncates the variable stretches:
 * only indices i < stretch_length may be requested, and growing it never
 * changes earlier generators.
 */
struct PairPlan {
    int k = 1;
    int a = 0;
    int b = 1;
    int stretch_length = 1;
    std::vector<Pattern> patterns;  // pair_sum_patterns(k)

    PairPlan(int k_, int a_, int b_, int stretch_length_)
        : k(k_), a(a_), b(b_), stretch_length(stretch_length_), patterns(pair_sum_patterns(k_)) {
        if (!(0 <= a && a < b && b <= k))
            throw std::invalid_argument("PairPlan needs 0 <= a < b <= k");
        if (stretch_length < 1)
            throw std::invalid_argument("PairPlan needs stretch_length >= 1");
    }

    Vector element(int i) const {
        if (i < 0 || i >= stretch_length)
            throw std::invalid_argument("PairPlan element index out of range");
        std::vector<Vector::Term> terms;
        for (int r = 0; r < a; ++r)
            terms.push_back({Ordinal{0, r}, Rational(1)});
        for (int r = 1; r <= b - a; ++r)
            terms.push_back({Ordinal{r, i}, Rational(1)});
        for (int r = 0; r < 2 * (k - b); ++r)
            terms.push_back({Ordinal{b - a + 1, r}, half()});
        return Vector::from_terms(std::move(terms));
    }

    std::vector<Vector> elements() const {
        std::vector<Vector> xs;
        xs.reserve(static_cast<std::size_t>(stretch_length));
        for (int i = 0; i < stretch_length; ++i)
            xs.push_back(element(i));
        return xs;
    }
};

// ---------------------------------------------------------------------------
// t-fold construction: X with X+...+X (t summands) monochromatic.
// ---------------------------------------------------------------------------

// All ordered sequences of positive integers summing to t, in lexicographic
// order; there are 2^(t-1) of them. These are the patterns a t-fold sum can
// show on a variable stretch, and the alphabet of the line search.
inline std::vector<Pattern> compositions(int t) {
    if (t < 1)
        throw std::invalid_argument("compositions needs t >= 1");
    std::vector<Pattern> out;
    std::vector<Rational> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            current.push_back(Rational(first));
            self(self, remaining - first);
            current.pop_back();
        }
    };
    rec(rec, t);
    return out;
}

// Color a word over the alphabet by coloring one witness vector whose
// pattern is the word's concatenation. Well-defined whenever the coloring is
// pattern-determined; the witness layout is then immaterial.
inline int induced_word_color(const ColoringSpec& c, const std::vector<Pattern>& alphabet,
                              const std::vector<int>& word, int witness_limit_part = 0,
                              int witness_offset = 0) {
    std::vector<Pattern> symbols;
    symbols.reserve(word.size());
    for (int s : word)
        symbols.push_back(alphabet.at(static_cast<std::size_t>(s)));
    Pattern p = concat(std::span<const Pattern>(symbols.data(), symbols.size()));
    return color_vector(c, pattern_witness(p, witness_limit_part, witness_offset));
}

/**
 * Plan for the t-fold construction along a monochromatic line: one stretch
 * per word position. Active positions become variable stretches (coefficient
 * 1 at offset i); a position holding constant symbol pi becomes a fixed
 * stretch with coefficient pi_s/t at offsets s = 1..len(pi).
 *
 * A t-fold sum then shows, on every variable stretch, the composition of t
 * given by the multiset's multiplicities, and on every fixed stretch the
 * constant symbol itself; its pattern is a point of the line.
 */
struct LinePlan {
    std::vector<Pattern> alphabet;
    Line line;
    int t = 1;
    int stretch_length = 1;

    LinePlan(std::vector<Pattern> alphabet_, Line line_, int t_, int stretch_length_)
        : alphabet(std::move(alphabet_)), line(std::move(line_)), t(t_),
          stretch_length(stretch_length_) {
        if (t < 1)
            throw std::invalid_argument("LinePlan needs t >= 1");
        if (stretch_length < 1)
            throw std::invalid_argument("LinePlan needs stretch_length >= 1");
        if (line.active_positions().empty())
            throw std::invalid_argument("LinePlan line has no active position");
        for (int s : line.word) {
            if (s == kStar)
                continue;
            if (s < 0 || s >= static_cast<int>(alphabet.size()))
                throw std::invalid_argument("LinePlan line symbol out of alphabet");
            if (static_cast<int>(alphabet[static_cast<std::size_t>(s)].length()) > stretch_length)
                throw std::invalid_argument(
                    "LinePlan constant symbol longer than stretch_length");
        }
    }

    Vector element(int i) const {
        if (i < 0 || i >= stretch_length)
            throw std::invalid_argument("LinePlan element index out of range");
        std::vector<Vector::Term> terms;
        for (std::size_t r = 0; r < line.word.size(); ++r) {
            int sym = line.word[r];
            if (sym == kStar) {
                terms.push_back({Ordinal{static_cast<int>(r), i}, Rational(1)});
            } else {
                const Pattern& p = alphabet[static_cast<std::size_t>(sym)];
                for (std::size_t s = 1; s <= p.length(); ++s)
                    terms.push_back({Ordinal{static_cast<int>(r), static_cast<int>(s)},
                                     p[s - 1] / Rational(t)});
            }
        }
        return Vector::from_terms(std::move(terms));
    }

    std::vector<Vector> elements() const {
        std::vector<Vector> xs;
        xs.reserve(static_cast<std::size_t>(stretch_length));
        for (int i = 0; i < stretch_length; ++i)
            xs.push_back(element(i));
        return xs;
    }
};

// ---------------------------------------------------------------------------
// Exhaustive sumset verification.
// ---------------------------------------------------------------------------

struct SumsetReport {
    std::vector<Vector> x;
    int t = 1;
    std::set<Pattern> observed_patterns;
    std::set<int> observed_colors;
    bool monochromatic = false;
    std::uint64_t multisets_checked = 0;
    std::optional<bool> expected_satisfied;  // set when an expected set was given
};

/**
 * Enumerates every size-t multiset from X, sums it exactly, and records the
 * pattern and color of each sum. C(|X|+t-1, t) sums in total. A zero sum is
 * a caller bug (the constructions never produce one) and throws.
 */
inline SumsetReport verify_sumset(const std::vector<Vector>& x, int t, const ColoringSpec& c,
                                  const std::optional<std::set<Pattern>>& expected = std::nullopt) {
    if (x.empty() || t < 1)
        throw std::invalid_argument("verify_sumset needs |X| >= 1 and t >= 1");
    SumsetReport report;
    report.x = x;
    report.t = t;

    const std::size_t n = x.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);  // non-decreasing
    while (true) {
        Vector sum;
        for (std::size_t j : idx)
            sum = sum + x[j];
        if (sum.is_zero())
            throw std::domain_error("t-fold sum equal to the zero vector");
        report.observed_patterns.insert(pattern(sum));
        report.observed_colors.insert(color_vector(c, sum));
        ++report.multisets_checked;

        std::size_t j = idx.size();
        while (j > 0 && idx[j - 1] == n - 1)
            --j;
        if (j == 0)
            break;
        ++idx[j - 1];
        for (std::size_t s = j; s < idx.size(); ++s)
            idx[s] = idx[j - 1];
    }

    report.monochromatic = report.observed_colors.size() == 1;
    if (expected) {
        bool ok = true;
        for (const auto& p : report.observed_patterns)
            ok = ok && expected->count(p) > 0;
        report.expected_satisfied = ok;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pipelines.
// ---------------------------------------------------------------------------

struct PairRun {
    std::vector<int> pattern_colors;  // color of each candidate pattern
    PairPlan plan;
    std::vector<Vector> x;
    SumsetReport report;
};

// Colors the k+1 candidate patterns, picks the first collision (a, b), and
// builds + verifies X at the requested size. The coloring must be
// pattern-determined for the verdict to be meaningful.
inline PairRun run_pair_pipeline(int k, const ColoringSpec& c, int m) {
    std::vector<Pattern> patterns = pair_sum_patterns(k);
    std::vector<int> colors;
    colors.reserve(patterns.size());
    for (const auto& p : patterns)
        colors.push_back(color_vector(c, pattern_witness(p)));
    auto [a, b] = pigeonhole_pair(colors);
    PairPlan plan(k, a, b, m);
    std::vector<Vector> x = plan.elements();
    std::set<Pattern> expected{patterns[static_cast<std::size_t>(a)],
                               patterns[static_cast<std::size_t>(b)]};
    SumsetReport report = verify_sumset(x, 2, c, expected);
    return PairRun{std::move(colors), std::move(plan), std::move(x), std::move(report)};
}

struct LineRun {
    std::vector<Pattern> alphabet;
    int word_length = 0;
    Line line;
    LinePlan plan;
    std::vector<Vector> x;
    SumsetReport report;
};

/**
 * Full t-fold pipeline: alphabet = compositions(t); word lengths are tried
 * in increasing order (iterative deepening) until the induced coloring of
 * the word cube admits a monochromatic line, then X is built along that line
 * and its t-fold sumset exhaustively verified. Word colors are memoized per
 * length. Throws search_exhausted when no line shows up within the cap.
 */
inline LineRun run_line_pipeline(int t, const ColoringSpec& c, int m, int length_cap) {
    if (length_cap < 1)
        throw std::invalid_argument("run_line_pipeline needs length_cap >= 1");
    std::vector<Pattern> alphabet = compositions(t);
    const int p = static_cast<int>(alphabet.size());

    for (int length = 1; length <= length_cap; ++length) {
        std::map<std::vector<int>, int> memo;
        auto word_color = [&](const std::vector<int>& w) {
            auto it = memo.find(w);
            if (it != memo.end())
                return it->second;
            int col = induced_word_color(c, alphabet, w);
            memo.emplace(w, col);
            return col;
        };
        std::optional<Line> line = find_monochromatic_line(p, length, word_color);
        if (!line)
            continue;

        LinePlan plan(alphabet, *line, t, m);
        std::vector<Vector> x = plan.elements();
        std::set<Pattern> expected;
        for (int sym = 0; sym < p; ++sym) {
            std::vector<Pattern> symbols;
            for (int s : line->point(sym))
                symbols.push_back(alphabet[static_cast<std::size_t>(s)]);
            expected.insert(concat(std::span<const Pattern>(symbols.data(), symbols.size())));
        }
        SumsetReport report = verify_sumset(x, t, c, expected);
        return LineRun{std::move(alphabet), length, *line, std::move(plan), std::move(x),
                       std::move(report)};
    }
    throw search_exhausted("cap exceeded: no monochromatic line up to word length " +
                           std::to_string(length_cap));
}

// Order-preserving relabeling of the supports of a family onto a fresh
// increasing index list; patterns of all members and of all their sums are
// unchanged. This is how a construction laid out on the canonical stretches
// is moved into the span of a homogeneous set A.
inline std::vector<Vector> translate_through(const std::vector<Vector>& xs,
                                             std::span<const Ordinal> a) {
    std::set<Ordinal> used;
    for (const auto& v : xs)
        for (const auto& term : v.terms())
            used.insert(term.index);
    if (used.size() > a.size())
        throw std::invalid_argument("translate_through: target set smaller than the union support");
    std::map<Ordinal, Ordinal> to;
    std::size_t i = 0;
    for (const auto& idx : used)
        to[idx] = a[i++];
    std::vector<Vector> out;
    out.reserve(xs.size());
    for (const auto& v : xs) {
        std::vector<Vector::Term> terms;
        for (const auto& term : v.terms())
            terms.push_back({to[term.index], term.coeff});
        out.push_back(Vector::from_terms(std::move(terms)));
    }
    return out;
}

}  // namespace sumsets
