#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sumsets/coloring.hpp"
#include "sumsets/construct.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/lines.hpp"
#include "sumsets/ramsey.hpp"
#include "sumsets/sumset_search.hpp"

namespace sumsets {

// Reports are ordered JSON so identical runs serialize byte-identically; the
// timing section is the one part a golden-file comparison must drop.
using report_json = nlohmann::ordered_json;

namespace detail {

inline report_json patterns_json(const std::vector<Pattern>& ps) {
    report_json out = report_json::array();
    for (const auto& p : ps)
        out.push_back(pattern_to_json(p));
    return out;
}

inline report_json pattern_set_json(const std::set<Pattern>& ps) {
    report_json out = report_json::array();
    for (const auto& p : ps)
        out.push_back(pattern_to_json(p));
    return out;
}

inline report_json vectors_json(const std::vector<Vector>& xs) {
    report_json out = report_json::array();
    for (const auto& v : xs)
        out.push_back(v.encode());
    return out;
}

// Line words serialize symbols by value, "*" for the active positions, so a
// report is readable without dereferencing alphabet indices.
inline report_json word_json(const std::vector<int>& word, const std::vector<Pattern>& alphabet) {
    report_json out = report_json::array();
    for (int s : word) {
        if (s == kStar)
            out.push_back("*");
        else
            out.push_back(alphabet.at(static_cast<std::size_t>(s)).str());
    }
    return out;
}

inline std::vector<int> word_from_json(const nlohmann::json& j,
                                       const std::vector<Pattern>& alphabet) {
    if (!j.is_array())
        throw parse_error("field line.word must be an array");
    std::vector<int> word;
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw parse_error("field line.word entries must be strings");
        std::string s = entry.get<std::string>();
        if (s == "*") {
            word.push_back(kStar);
            continue;
        }
        Pattern p = Pattern::parse(s);
        auto it = std::find(alphabet.begin(), alphabet.end(), p);
        if (it == alphabet.end())
            throw parse_error("field line.word symbol \"" + s + "\" not in the alphabet");
        word.push_back(static_cast<int>(it - alphabet.begin()));
    }
    return word;
}

inline report_json sumset_json(const SumsetReport& rep) {
    report_json out;
    out["x"] = vectors_json(rep.x);
    out["t"] = rep.t;
    out["observed_patterns"] = pattern_set_json(rep.observed_patterns);
    out["observed_colors"] = rep.observed_colors;
    out["monochromatic"] = rep.monochromatic;
    out["multisets_checked"] = rep.multisets_checked;
    if (rep.expected_satisfied)
        out["expected_satisfied"] = *rep.expected_satisfied;
    return out;
}

inline std::vector<Vector> vectors_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw parse_error("field " + field + " must be a nonempty array");
    std::vector<Vector> out;
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw parse_error("field " + field + " entries must be strings");
        out.push_back(Vector::parse(entry.get<std::string>()));
    }
    return out;
}

inline std::set<Pattern> pattern_set_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array())
        throw parse_error("field " + field + " must be an array");
    std::set<Pattern> out;
    for (const auto& entry : j)
        out.insert(pattern_from_json(entry, field));
    return out;
}

inline report_json timing_json(double milliseconds) {
    report_json t;
    t["milliseconds"] = milliseconds;
    return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Report builders, one per command.
// ---------------------------------------------------------------------------

inline report_json construct2_report(int k, int m, const ColoringSpec& c, const PairRun& run,
                                     double milliseconds) {
    report_json r;
    r["command"] = "construct2";
    r["parameters"] = {{"k", k}, {"m", m}};
    r["coloring"] = coloring_to_json(c);
    report_json result;
    result["candidate_patterns"] = detail::patterns_json(run.plan.patterns);
    result["pattern_colors"] = run.pattern_colors;
    result["a"] = run.plan.a;
    result["b"] = run.plan.b;
    result["sumset"] = detail::sumset_json(run.report);
    r["result"] = std::move(result);
    r["timing"] = detail::timing_json(milliseconds);
    return r;
}

inline report_json construct_t_report(int t, int m, int length_cap, const ColoringSpec& c,
                                      const LineRun& run, double milliseconds) {
    report_json r;
    r["command"] = "construct-t";
    r["parameters"] = {{"t", t}, {"m", m}, {"N_cap", length_cap}};
    r["coloring"] = coloring_to_json(c);
    report_json result;
    result["alphabet"] = detail::patterns_json(run.alphabet);
    result["word_length"] = run.word_length;
    result["line"] = {{"word", detail::word_json(run.line.word, run.alphabet)}};
    result["sumset"] = detail::sumset_json(run.report);
    r["result"] = std::move(result);
    r["timing"] = detail::timing_json(milliseconds);
    return r;
}

inline report_json reduce_report(const std::vector<Pattern>& pi, int basis_size, int target,
                                 const ColoringSpec& c, const ReductionResult& res,
                                 double milliseconds) {
    report_json r;
    r["command"] = "reduce";
    r["parameters"] = {{"B", basis_size}, {"m", target}};
    r["parameters"]["patterns"] = detail::patterns_json(pi);
    r["coloring"] = coloring_to_json(c);
    report_json result;
    report_json a = report_json::array();
    for (const auto& o : res.a)
        a.push_back(o.str());
    result["A"] = std::move(a);
    report_json cmap = report_json::array();
    for (const auto& [p, col] : res.color_map)
        cmap.push_back({{"pattern", pattern_to_json(p)}, {"color", col}});
    result["color_map"] = std::move(cmap);
    result["tuples_verified"] = res.witness_certificate.size();
    result["stats"] = {{"nodes", res.stats.nodes},
                       {"prunes", res.stats.prunes},
                       {"tuples_evaluated", res.stats.tuples_evaluated}};
    r["result"] = std::move(result);
    r["timing"] = detail::timing_json(milliseconds);
    return r;
}

inline report_json hj_search_report(int t, int length_cap, const ColoringSpec& c, int word_length,
                                    const Line& line, const std::vector<Pattern>& alphabet,
                                    int line_color, double milliseconds) {
    report_json r;
    r["command"] = "hj-search";
    r["parameters"] = {{"t", t}, {"N_cap", length_cap}};
    r["coloring"] = coloring_to_json(c);
    report_json result;
    result["alphabet"] = detail::patterns_json(alphabet);
    result["word_length"] = word_length;
    result["line"] = {{"word", detail::word_json(line.word, alphabet)}};
    result["color"] = line_color;
    r["result"] = std::move(result);
    r["timing"] = detail::timing_json(milliseconds);
    return r;
}

// Integer colorings are referenced by name (plus seed/k for the seeded one);
// that is all the verify replay needs to rebuild them.
inline report_json falsify_report(const std::string& coloring_name, int k,
                                  std::optional<std::uint64_t> seed, int bound, int size_cap,
                                  const SumsetSearchResult& res, double milliseconds) {
    report_json r;
    r["command"] = "falsify";
    r["parameters"] = {{"M", bound}, {"size_cap", size_cap}};
    report_json c;
    c["name"] = coloring_name;
    c["k"] = k;
    if (seed)
        c["seed"] = *seed;
    r["coloring"] = std::move(c);
    report_json result;
    result["best_x"] = res.best_x;
    result["best_size"] = res.best_size;
    result["color"] = res.color;
    result["exhaustive"] = res.exhaustive;
    result["nodes"] = res.nodes;
    r["result"] = std::move(result);
    r["timing"] = detail::timing_json(milliseconds);
    return r;
}

// ---------------------------------------------------------------------------
// Replay: re-derive everything a report claims and diff against it.
// ---------------------------------------------------------------------------

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> notes;  // one line per failed check
};

inline IntColoring named_int_coloring(const std::string& name, int k, std::uint64_t seed) {
    if (name == "doubling")
        return doubling_int_coloring();
    if (name == "parity")
        return parity_int_coloring();
    if (name == "seeded")
        return seeded_int_coloring(seed, k);
    throw parse_error("field coloring.name must be one of doubling, parity, seeded");
}

namespace detail {

inline void check(VerifyOutcome& out, bool cond, const std::string& what) {
    if (!cond) {
        out.ok = false;
        out.notes.push_back(what);
    }
}

inline void verify_sumset_section(VerifyOutcome& out, const nlohmann::json& section,
                                  const std::vector<Vector>& x, int t, const ColoringSpec& c,
                                  const std::optional<std::set<Pattern>>& expected) {
    SumsetReport rep = verify_sumset(x, t, c, expected);
    check(out, rep.monochromatic, "recomputed sumset is not monochromatic");
    check(out, section.at("monochromatic").get<bool>() == rep.monochromatic,
          "monochromatic flag does not match the recomputation");
    check(out,
          pattern_set_from_json(section.at("observed_patterns"), "observed_patterns") ==
              rep.observed_patterns,
          "observed_patterns do not match the recomputation");
    check(out, section.at("observed_colors").get<std::set<int>>() == rep.observed_colors,
          "observed_colors do not match the recomputation");
    check(out, section.at("multisets_checked").get<std::uint64_t>() == rep.multisets_checked,
          "multisets_checked does not match the recomputation");
    if (expected)
        check(out, rep.expected_satisfied.value_or(false),
              "an observed pattern lies outside the expected set");
}

inline void verify_construct2(VerifyOutcome& out, const nlohmann::json& r) {
    ColoringSpec c = coloring_from_json(r.at("coloring"));
    const int k = r.at("parameters").at("k").get<int>();
    const auto& result = r.at("result");

    std::vector<Pattern> patterns = pair_sum_patterns(k);
    std::vector<int> colors;
    for (const auto& p : patterns)
        colors.push_back(color_vector(c, pattern_witness(p)));
    check(out, result.at("pattern_colors").get<std::vector<int>>() == colors,
          "candidate pattern colors do not match the recomputation");
    auto [a, b] = pigeonhole_pair(colors);
    check(out, result.at("a").get<int>() == a && result.at("b").get<int>() == b,
          "(a, b) is not the least pigeonhole pair of the recomputed colors");

    std::vector<Vector> x = vectors_from_json(result.at("sumset").at("x"), "result.sumset.x");
    std::set<Pattern> expected{patterns.at(static_cast<std::size_t>(a)),
                               patterns.at(static_cast<std::size_t>(b))};
    verify_sumset_section(out, result.at("sumset"), x, 2, c, expected);

    PairPlan plan(k, a, b, static_cast<int>(x.size()));
    check(out, plan.elements() == x, "X does not match the recomputed generators");
}

inline void verify_construct_t(VerifyOutcome& out, const nlohmann::json& r) {
    ColoringSpec c = coloring_from_json(r.at("coloring"));
    const int t = r.at("parameters").at("t").get<int>();
    const auto& result = r.at("result");

    std::vector<Pattern> alphabet = compositions(t);
    check(out,
          pattern_set_from_json(result.at("alphabet"), "result.alphabet") ==
              std::set<Pattern>(alphabet.begin(), alphabet.end()),
          "alphabet does not match compositions of t");

    Line line{word_from_json(result.at("line").at("word"), alphabet)};
    check(out, !line.active_positions().empty(), "line has no active position");

    std::set<int> point_colors;
    std::set<Pattern> expected;
    for (int sym = 0; sym < static_cast<int>(alphabet.size()); ++sym) {
        std::vector<int> point = line.point(sym);
        point_colors.insert(induced_word_color(c, alphabet, point));
        std::vector<Pattern> symbols;
        for (int s : point)
            symbols.push_back(alphabet.at(static_cast<std::size_t>(s)));
        expected.insert(concat(std::span<const Pattern>(symbols.data(), symbols.size())));
    }
    check(out, point_colors.size() == 1, "line is not monochromatic under the induced coloring");

    std::vector<Vector> x = vectors_from_json(result.at("sumset").at("x"), "result.sumset.x");
    verify_sumset_section(out, result.at("sumset"), x, t, c, expected);

    LinePlan plan(alphabet, line, t, static_cast<int>(x.size()));
    check(out, plan.elements() == x, "X does not match the recomputed generators");
}

inline void verify_reduce(VerifyOutcome& out, const nlohmann::json& r) {
    ColoringSpec c = coloring_from_json(r.at("coloring"));
    const auto& result = r.at("result");

    std::vector<Pattern> pi;
    for (const auto& entry : r.at("parameters").at("patterns"))
        pi.push_back(pattern_from_json(entry, "parameters.patterns"));

    std::vector<Ordinal> a;
    for (const auto& entry : result.at("A"))
        a.push_back(Ordinal::parse(entry.get<std::string>()));

    std::map<Pattern, int> color_map;
    for (const auto& entry : result.at("color_map"))
        color_map.emplace(pattern_from_json(entry.at("pattern"), "color_map.pattern"),
                          entry.at("color").get<int>());

    try {
        auto records = verify_reduction(c, pi, a, color_map);
        check(out, result.at("tuples_verified").get<std::size_t>() == records.size(),
              "tuples_verified does not match the recomputation");
    } catch (const verification_error& e) {
        check(out, false, e.what());
    }
}

inline void verify_hj_search(VerifyOutcome& out, const nlohmann::json& r) {
    ColoringSpec c = coloring_from_json(r.at("coloring"));
    const int t = r.at("parameters").at("t").get<int>();
    const auto& result = r.at("result");

    std::vector<Pattern> alphabet = compositions(t);
    Line line{word_from_json(result.at("line").at("word"), alphabet)};
    check(out, !line.active_positions().empty(), "line has no active position");

    std::set<int> point_colors;
    for (int sym = 0; sym < static_cast<int>(alphabet.size()); ++sym)
        point_colors.insert(induced_word_color(c, alphabet, line.point(sym)));
    check(out, point_colors.size() == 1, "line is not monochromatic under the induced coloring");
    if (point_colors.size() == 1)
        check(out, result.at("color").get<int>() == *point_colors.begin(),
              "recorded line color does not match the recomputation");
}

inline void verify_falsify(VerifyOutcome& out, const nlohmann::json& r) {
    const auto& cj = r.at("coloring");
    IntColoring c = named_int_coloring(cj.at("name").get<std::string>(), cj.at("k").get<int>(),
                                       cj.value("seed", std::uint64_t{0}));
    const auto& result = r.at("result");
    std::vector<std::int64_t> x = result.at("best_x").get<std::vector<std::int64_t>>();
    check(out, result.at("best_size").get<int>() == static_cast<int>(x.size()),
          "best_size does not equal |best_x|");
    const int color = result.at("color").get<int>();
    const int bound = r.at("parameters").at("M").get<int>();
    for (std::size_t i = 0; i < x.size(); ++i) {
        check(out, 1 <= x[i] && x[i] <= bound, "a member of best_x lies outside [1, M]");
        for (std::size_t j = i; j < x.size(); ++j)
            check(out, c.at(x[i] + x[j]) == color,
                  "a pairwise sum of best_x misses the recorded color");
    }
}

}  // namespace detail

/**
 * Replays a report: rebuilds the coloring, re-derives the claimed objects,
 * and rechecks every verifiable claim. Structural problems (missing fields,
 * malformed encodings) throw parse_error; substantive mismatches come back
 * as notes with ok=false. The timing section is ignored.
 */
inline VerifyOutcome verify_report(const nlohmann::json& r) {
    VerifyOutcome out;
    std::string command;
    try {
        command = r.at("command").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        throw parse_error("field command missing from report");
    }
    try {
        if (command == "construct2")
            detail::verify_construct2(out, r);
        else if (command == "construct-t")
            detail::verify_construct_t(out, r);
        else if (command == "reduce")
            detail::verify_reduce(out, r);
        else if (command == "hj-search")
            detail::verify_hj_search(out, r);
        else if (command == "falsify")
            detail::verify_falsify(out, r);
        else
            throw parse_error("field command has unknown value \"" + command + "\"");
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("report is structurally invalid: ") + e.what());
    }
    return out;
}

}  // namespace sumsets
