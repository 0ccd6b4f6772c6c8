#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "sumsets/construct.hpp"

using namespace sumsets;

namespace {

const Pattern kTwo{Rational(2)};
const Pattern kOneOne{Rational(1), Rational(1)};

// All 3^|patterns| pattern tables whose entries are unset / 0 / 1.
std::vector<ColoringSpec> all_two_color_tables(const std::vector<Pattern>& patterns) {
    std::vector<ColoringSpec> out;
    std::vector<int> choice(patterns.size(), 0);  // 0 = unset, 1, 2 = colors 0, 1
    while (true) {
        std::map<Pattern, int> entries;
        for (std::size_t i = 0; i < patterns.size(); ++i)
            if (choice[i] > 0)
                entries.emplace(patterns[i], choice[i] - 1);
        out.push_back(ColoringSpec::table(2, std::move(entries)));

        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == 3) {
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size())
            break;
    }
    return out;
}

}  // namespace

TEST_CASE("pair sum pattern family") {
    std::vector<Pattern> k1 = pair_sum_patterns(1);
    REQUIRE(k1.size() == 2);
    CHECK(k1[0] == kOneOne);
    CHECK(k1[1] == kTwo);

    std::vector<Pattern> k2 = pair_sum_patterns(2);
    REQUIRE(k2.size() == 3);
    CHECK(k2[0] == Pattern{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(k2[1] == Pattern{Rational(2), Rational(1), Rational(1)});
    CHECK(k2[2] == Pattern{Rational(2), Rational(2)});

    CHECK(pair_sum_patterns(3)[1] ==
          Pattern{Rational(2), Rational(1), Rational(1), Rational(1), Rational(1)});

    for (int k = 1; k <= 5; ++k) {
        std::vector<Pattern> ps = pair_sum_patterns(k);
        REQUIRE(ps.size() == static_cast<std::size_t>(k) + 1);
        for (int a = 0; a <= k; ++a)
            CHECK(ps[static_cast<std::size_t>(a)].length() ==
                  static_cast<std::size_t>(2 * k - a));
    }

    CHECK_THROWS_AS(pair_sum_patterns(0), std::invalid_argument);
}

TEST_CASE("pigeonhole pair") {
    CHECK(pigeonhole_pair({0, 1, 0}) == std::pair<int, int>{0, 2});
    CHECK(pigeonhole_pair({1, 1}) == std::pair<int, int>{0, 1});
    CHECK(pigeonhole_pair({2, 0, 1, 0}) == std::pair<int, int>{1, 3});

    SUBCASE("total and minimal on every list of k+1 colors from k values") {
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> colors(static_cast<std::size_t>(k) + 1, 0);
            while (true) {
                auto [a, b] = pigeonhole_pair(colors);
                REQUIRE(a < b);
                REQUIRE(colors[static_cast<std::size_t>(a)] ==
                        colors[static_cast<std::size_t>(b)]);
                // minimality: nothing lexicographically earlier collides
                for (int a2 = 0; a2 <= a; ++a2)
                    for (int b2 = a2 + 1; b2 <= k && std::pair(a2, b2) < std::pair(a, b); ++b2)
                        REQUIRE(colors[static_cast<std::size_t>(a2)] !=
                                colors[static_cast<std::size_t>(b2)]);

                std::size_t i = 0;
                while (i < colors.size() && ++colors[i] == k) {
                    colors[i] = 0;
                    ++i;
                }
                if (i == colors.size())
                    break;
            }
        }
    }
}

TEST_CASE("pair construction generators") {
    SUBCASE("k=1, a=0, b=1: a single unit on the first variable stretch") {
        PairPlan plan(1, 0, 1, 4);
        for (int i = 0; i < 4; ++i)
            CHECK(plan.element(i) == Vector::unit(Ordinal{1, i}));
    }
    SUBCASE("k=2, a=0, b=1: one variable stretch, two half entries") {
        PairPlan plan(2, 0, 1, 3);
        CHECK(plan.element(2) == Vector::unit(Ordinal{1, 2}) +
                                     Vector::unit(Ordinal{2, 0}, half()) +
                                     Vector::unit(Ordinal{2, 1}, half()));
    }
    SUBCASE("k=2, a=1, b=2: fixed prefix and one variable stretch") {
        PairPlan plan(2, 1, 2, 3);
        CHECK(plan.element(2) == Vector::unit(Ordinal{0, 0}) + Vector::unit(Ordinal{1, 2}));
    }
    SUBCASE("index and argument validation") {
        CHECK_THROWS_AS(PairPlan(2, 0, 1, 3).element(3), std::invalid_argument);
        CHECK_THROWS_AS(PairPlan(2, 0, 1, 3).element(-1), std::invalid_argument);
        CHECK_THROWS_AS(PairPlan(2, 1, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(PairPlan(2, 0, 3, 3), std::invalid_argument);
    }
}

TEST_CASE("pair sums have exactly the two planned patterns") {
    // exhaustive identity over k <= 3 here; the acceptance suite pushes to
    // k = 4 and m = 16
    const int m = 8;
    for (int k = 1; k <= 3; ++k) {
        std::vector<Pattern> ps = pair_sum_patterns(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                PairPlan plan(k, a, b, m);
                std::vector<Vector> x = plan.elements();
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        const Pattern& want =
                            i != j ? ps[static_cast<std::size_t>(a)]
                                   : ps[static_cast<std::size_t>(b)];
                        CHECK(pattern(x[static_cast<std::size_t>(i)] +
                                      x[static_cast<std::size_t>(j)]) == want);
                    }
            }
    }
}

TEST_CASE("compositions") {
    std::vector<Pattern> t2 = compositions(2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == kOneOne);
    CHECK(t2[1] == kTwo);

    std::vector<Pattern> t3 = compositions(3);
    REQUIRE(t3.size() == 4);
    CHECK(t3[0] == Pattern{Rational(1), Rational(1), Rational(1)});
    CHECK(t3[1] == Pattern{Rational(1), Rational(2)});
    CHECK(t3[2] == Pattern{Rational(2), Rational(1)});
    CHECK(t3[3] == Pattern{Rational(3)});

    CHECK(compositions(5).size() == 16);
    CHECK_THROWS_AS(compositions(0), std::invalid_argument);

    SUBCASE("count, sums, distinctness up to t = 10") {
        for (int t = 1; t <= 10; ++t) {
            std::vector<Pattern> cs = compositions(t);
            CHECK(cs.size() == (1u << (t - 1)));
            std::set<Pattern> distinct(cs.begin(), cs.end());
            CHECK(distinct.size() == cs.size());
            for (const auto& p : cs) {
                Rational sum(0);
                for (std::size_t i = 0; i < p.length(); ++i)
                    sum = sum + p[i];
                CHECK(sum == Rational(t));
            }
        }
    }
}

TEST_CASE("induced word coloring") {
    std::vector<Pattern> alphabet = compositions(2);  // [(1,1), (2)]

    SUBCASE("table lookup of the concatenated pattern") {
        std::map<Pattern, int> entries;
        entries.emplace(Pattern{Rational(2), Rational(1), Rational(1)}, 1);
        ColoringSpec c = ColoringSpec::table(2, std::move(entries));
        // word ((2),(1,1)) concatenates to (2,1,1)
        CHECK(induced_word_color(c, alphabet, {1, 0}) == 1);
        CHECK(induced_word_color(c, alphabet, {0, 1}) == 0);  // (1,1,2): default
    }
    SUBCASE("one color means color 0") {
        CHECK(induced_word_color(ColoringSpec::constant(1), alphabet, {0, 0, 1}) == 0);
    }
    SUBCASE("witness layout does not matter for pattern-determined colorings") {
        ColoringSpec c = ColoringSpec::seeded(ColoringKind::pattern_seeded, 3, 17);
        CHECK(induced_word_color(c, alphabet, {1, 0}, 0, 0) ==
              induced_word_color(c, alphabet, {1, 0}, 5, 100));
    }
}

TEST_CASE("line construction generators") {
    SUBCASE("t=2, line (*): matches the k=1 pair construction shape") {
        LinePlan plan(compositions(2), Line{{kStar}}, 2, 4);
        for (int i = 0; i < 4; ++i)
            CHECK(plan.element(i) == Vector::unit(Ordinal{0, i}));
        std::vector<Vector> x = plan.elements();
        CHECK(pattern(x[0] + x[1]) == kOneOne);
        CHECK(pattern(x[2] + x[2]) == kTwo);
    }
    SUBCASE("t=3, line (*, (3)): unit coefficient on the fixed stretch") {
        LinePlan plan(compositions(3), Line{{kStar, 3}}, 3, 4);
        CHECK(plan.element(2) == Vector::unit(Ordinal{0, 2}) + Vector::unit(Ordinal{1, 1}));
    }
    SUBCASE("t=3, line ((1,2), *): thirds on the fixed stretch") {
        LinePlan plan(compositions(3), Line{{1, kStar}}, 3, 4);
        CHECK(plan.element(0) == Vector::unit(Ordinal{0, 1}, Rational::make(1, 3)) +
                                     Vector::unit(Ordinal{0, 2}, Rational::make(2, 3)) +
                                     Vector::unit(Ordinal{1, 0}));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(LinePlan(compositions(2), Line{{0, 1}}, 2, 4),
                        std::invalid_argument);  // no star
        CHECK_THROWS_AS(LinePlan(compositions(2), Line{{kStar, 7}}, 2, 4),
                        std::invalid_argument);  // symbol out of alphabet
        CHECK_THROWS_AS(LinePlan(compositions(3), Line{{kStar, 0}}, 3, 2),
                        std::invalid_argument);  // (1,1,1) longer than stretch_length
        CHECK_THROWS_AS(LinePlan(compositions(2), Line{{kStar}}, 2, 4).element(9),
                        std::invalid_argument);
    }
}

TEST_CASE("t-fold sums realize the line points exactly") {
    // Every size-t multiset with multiplicity composition kappa has the
    // pattern of the line point with * := kappa.
    const int t = 3;
    std::vector<Pattern> alphabet = compositions(t);
    for (const Line& line : {Line{{kStar}}, Line{{kStar, 3}}, Line{{1, kStar, 0}}}) {
        const int m = 5;
        LinePlan plan(alphabet, line, t, m);
        std::vector<Vector> x = plan.elements();

        std::vector<int> idx(t, 0);  // non-decreasing index multisets
        while (true) {
            // multiplicity composition of the chosen indices, in index order
            std::vector<Rational> kappa;
            for (int u = 0; u < t;) {
                int v = u;
                while (v < t && idx[v] == idx[u])
                    ++v;
                kappa.push_back(Rational(v - u));
                u = v;
            }
            auto it = std::find(alphabet.begin(), alphabet.end(), Pattern(kappa));
            REQUIRE(it != alphabet.end());
            int sym = static_cast<int>(it - alphabet.begin());

            Vector sum;
            for (int u = 0; u < t; ++u)
                sum = sum + x[static_cast<std::size_t>(idx[u])];
            std::vector<Pattern> expected_syms;
            for (int s : line.point(sym))
                expected_syms.push_back(alphabet[static_cast<std::size_t>(s)]);
            CHECK(pattern(sum) ==
                  concat(std::span<const Pattern>(expected_syms.data(), expected_syms.size())));

            int j = t;
            while (j > 0 && idx[j - 1] == m - 1)
                --j;
            if (j == 0)
                break;
            ++idx[j - 1];
            for (int s = j; s < t; ++s)
                idx[s] = idx[j - 1];
        }
    }
}

TEST_CASE("exhaustive sumset verification") {
    SUBCASE("pair construction at k=1") {
        PairPlan plan(1, 0, 1, 4);
        SumsetReport rep = verify_sumset(plan.elements(), 2, ColoringSpec::constant(1));
        CHECK(rep.observed_patterns == std::set<Pattern>{kOneOne, kTwo});
        CHECK(rep.monochromatic);
        CHECK(rep.multisets_checked == 10);  // C(5,2)
    }
    SUBCASE("single vector doubled") {
        SumsetReport rep = verify_sumset({Vector::unit(Ordinal{0, 0})}, 2,
                                         ColoringSpec::constant(1));
        CHECK(rep.observed_patterns == std::set<Pattern>{kTwo});
        CHECK(rep.multisets_checked == 1);
        CHECK(rep.monochromatic);
    }
    SUBCASE("expected-set flag") {
        PairPlan plan(1, 0, 1, 3);
        SumsetReport hit = verify_sumset(plan.elements(), 2, ColoringSpec::constant(1),
                                         std::set<Pattern>{kOneOne, kTwo});
        CHECK(hit.expected_satisfied == true);
        SumsetReport miss = verify_sumset(plan.elements(), 2, ColoringSpec::constant(1),
                                          std::set<Pattern>{kOneOne});
        CHECK(miss.expected_satisfied == false);
    }
    SUBCASE("a zero sum is a loud error") {
        Vector e0 = Vector::unit(Ordinal{0, 0});
        CHECK_THROWS_AS(verify_sumset({e0, -e0}, 2, ColoringSpec::constant(1)),
                        std::domain_error);
    }
}

TEST_CASE("pair pipeline end to end") {
    std::map<Pattern, int> entries;
    entries.emplace(pair_sum_patterns(2)[0], 1);  // pi_0 -> 1
    entries.emplace(pair_sum_patterns(2)[1], 0);  // pi_1 -> 0
    entries.emplace(pair_sum_patterns(2)[2], 1);  // pi_2 -> 1
    ColoringSpec c = ColoringSpec::table(2, std::move(entries));

    PairRun run = run_pair_pipeline(2, c, 12);
    CHECK(run.pattern_colors == std::vector<int>{1, 0, 1});
    CHECK(run.plan.a == 0);
    CHECK(run.plan.b == 2);
    CHECK(run.report.monochromatic);
    CHECK(run.report.observed_colors == std::set<int>{1});
    CHECK(run.report.multisets_checked == 78);  // C(13,2)
    CHECK(run.report.expected_satisfied == true);
}

TEST_CASE("line pipeline end to end") {
    SUBCASE("one color succeeds immediately") {
        LineRun run = run_line_pipeline(2, ColoringSpec::constant(1), 6, 4);
        CHECK(run.word_length == 1);
        CHECK(run.line.word == std::vector<int>{kStar});
        CHECK(run.report.monochromatic);
    }
    SUBCASE("two patterns of one color succeed at length 1") {
        std::map<Pattern, int> entries;
        entries.emplace(kOneOne, 1);
        entries.emplace(kTwo, 1);
        ColoringSpec c = ColoringSpec::table(2, std::move(entries));
        LineRun run = run_line_pipeline(2, c, 6, 4);
        CHECK(run.word_length == 1);
        CHECK(run.report.observed_colors == std::set<int>{1});
    }
    SUBCASE("seeded pattern coloring at t=3") {
        ColoringSpec c = ColoringSpec::seeded(ColoringKind::pattern_seeded, 2, 11);
        LineRun run = run_line_pipeline(3, c, 8, 6);
        CHECK(run.report.monochromatic);
        CHECK(run.report.multisets_checked == 120);  // C(10,3)
        CHECK(run.report.expected_satisfied == true);
    }
    SUBCASE("cap exceeded is a distinct error") {
        std::map<Pattern, int> entries;
        entries.emplace(kOneOne, 0);
        entries.emplace(kTwo, 1);
        ColoringSpec c = ColoringSpec::table(2, std::move(entries));
        // at length 1 the only line (*) has differently colored points
        CHECK_THROWS_AS(run_line_pipeline(2, c, 4, 1), search_exhausted);
    }
}

TEST_CASE("the pair construction is a line over the two compositions of 2") {
    // The word 2^a *^(b-a) (1,1)^(k-b) has points pi_a (* := (1,1)) and
    // pi_b (* := (2)), so the pigeonhole collision makes it a monochromatic
    // line for the induced coloring.
    std::vector<Pattern> alphabet = compositions(2);
    // k = 1 admits only the constant coloring; k = 2 all 27 two-color tables.
    std::vector<std::pair<int, ColoringSpec>> cases = {{1, ColoringSpec::constant(1)}};
    for (const ColoringSpec& c : all_two_color_tables(pair_sum_patterns(2)))
        cases.emplace_back(2, c);
    for (const auto& [k, c] : cases) {
        PairRun run = run_pair_pipeline(k, c, 4);
        std::vector<int> word;
        for (int r = 0; r < run.plan.a; ++r)
            word.push_back(1);  // constant (2)
        for (int r = 0; r < run.plan.b - run.plan.a; ++r)
            word.push_back(kStar);
        for (int r = 0; r < k - run.plan.b; ++r)
            word.push_back(0);  // constant (1,1)
        Line line{word};
        CHECK(induced_word_color(c, alphabet, line.point(0)) ==
              induced_word_color(c, alphabet, line.point(1)));
    }
}

TEST_CASE("growing m never changes earlier generators") {
    SUBCASE("pair construction") {
        for (int k = 1; k <= 3; ++k)
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b <= k; ++b) {
                    PairPlan small(k, a, b, 8);
                    PairPlan large(k, a, b, 16);
                    for (int i = 0; i < 8; ++i)
                        CHECK(small.element(i) == large.element(i));
                }
    }
    SUBCASE("line construction") {
        std::vector<Pattern> alphabet = compositions(3);
        Line line{{1, kStar, 3}};
        LinePlan small(alphabet, line, 3, 8);
        LinePlan large(alphabet, line, 3, 16);
        for (int i = 0; i < 8; ++i)
            CHECK(small.element(i) == large.element(i));
    }
}

TEST_CASE("order-preserving translation preserves patterns") {
    PairPlan plan(2, 0, 2, 4);
    std::vector<Vector> x = plan.elements();

    // move the construction into an arbitrary increasing target set
    std::vector<Ordinal> target;
    for (int i = 0; i < 40; ++i)
        target.push_back(Ordinal{i / 5, 3 * (i % 5) + 1});
    std::sort(target.begin(), target.end());
    std::vector<Vector> moved = translate_through(x, target);

    REQUIRE(moved.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            CHECK(pattern(moved[i] + moved[j]) == pattern(x[i] + x[j]));

    std::vector<Ordinal> tiny{Ordinal{0, 0}, Ordinal{0, 1}};
    CHECK_THROWS_AS(translate_through(x, tiny), std::invalid_argument);
}
