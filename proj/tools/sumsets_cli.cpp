// Command-line front end: ingest coloring specs, run the constructions and
// searches, emit machine-readable self-verifying reports.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumsets/sumsets.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kCapExceeded = 3;
constexpr int kVerificationFailure = 4;

using sumsets::ColoringSpec;
using sumsets::report_json;

class Stopwatch {
  public:
    double milliseconds() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sumsets::parse_error("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw sumsets::parse_error("file " + path + " is not valid JSON: " + e.what());
    }
}

// Coloring resolution for the vector-coloring commands: an explicit file
// wins; otherwise --seed selects a seeded pattern coloring and plain --k the
// constant one. --k must agree with the file when both are given.
ColoringSpec resolve_coloring(const std::string& path, std::optional<int> k,
                              std::optional<std::uint64_t> seed) {
    if (!path.empty()) {
        ColoringSpec c = sumsets::coloring_from_json(load_json(path));
        if (k && *k != c.k)
            throw std::invalid_argument("--k disagrees with the coloring file's k");
        return c;
    }
    if (!k)
        throw std::invalid_argument("--k is required when no --coloring file is given");
    if (seed)
        return ColoringSpec::seeded(sumsets::ColoringKind::pattern_seeded, *k, *seed);
    return ColoringSpec::constant(*k);
}

void emit(const report_json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
}

std::vector<sumsets::Pattern> parse_pattern_flags(const std::vector<std::string>& raw) {
    std::vector<sumsets::Pattern> out;
    out.reserve(raw.size());
    for (const auto& s : raw)
        out.push_back(sumsets::Pattern::parse(s));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory for monochromatic sumsets of rational vectors"};
    app.require_subcommand(1);

    std::string coloring_path;
    std::string out_path;
    std::optional<int> k;
    std::optional<std::uint64_t> seed;
    int m = 8;
    int t = 2;
    int length_cap = 6;

    auto add_coloring_flags = [&](CLI::App* cmd) {
        cmd->add_option("--coloring", coloring_path, "coloring spec file (JSON)");
        cmd->add_option("--k", k, "number of colors (defaults to the coloring file's k)");
        cmd->add_option("--seed", seed, "seed for a seeded pattern coloring");
        cmd->add_option("--out", out_path, "report file (default: stdout)");
    };

    CLI::App* construct2 = app.add_subcommand(
        "construct2", "build X with X+X monochromatic via the pigeonhole pair");
    construct2->add_option("--m", m, "number of generators")->check(CLI::PositiveNumber);
    add_coloring_flags(construct2);

    CLI::App* construct_t = app.add_subcommand(
        "construct-t", "build X with the t-fold sumset monochromatic via a line");
    construct_t->add_option("--t", t, "fold count")->check(CLI::PositiveNumber);
    construct_t->add_option("--m", m, "number of generators")->check(CLI::PositiveNumber);
    construct_t->add_option("--N-cap", length_cap, "maximum word length to try")
        ->check(CLI::PositiveNumber);
    add_coloring_flags(construct_t);

    std::vector<std::string> pattern_flags;
    int basis_size = 0;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "find a basis subset on which color depends only on pattern");
    reduce->add_option("--pattern", pattern_flags,
                       "pattern as comma-separated fractions (repeatable)")
        ->required();
    reduce->add_option("--B", basis_size, "basis prefix size to search")
        ->required()
        ->check(CLI::PositiveNumber);
    reduce->add_option("--m", m, "target set size")->check(CLI::PositiveNumber);
    add_coloring_flags(reduce);

    CLI::App* hj_search = app.add_subcommand(
        "hj-search", "find a monochromatic combinatorial line for the induced word coloring");
    hj_search->add_option("--t", t, "fold count (alphabet = compositions of t)")
        ->check(CLI::PositiveNumber);
    hj_search->add_option("--N-cap", length_cap, "maximum word length to try")
        ->check(CLI::PositiveNumber);
    add_coloring_flags(hj_search);

    int bound = 0;
    int size_cap = 0;
    std::string int_coloring_name = "doubling";
    CLI::App* falsify = app.add_subcommand(
        "falsify", "search [1, M] for the largest integer set with monochromatic sumset");
    falsify->add_option("--M", bound, "integer search bound")
        ->required()
        ->check(CLI::PositiveNumber);
    falsify->add_option("--coloring", int_coloring_name, "doubling, parity, or seeded");
    falsify->add_option("--k", k, "number of colors for the seeded coloring");
    falsify->add_option("--seed", seed, "seed for the seeded coloring");
    falsify->add_option("--size-cap", size_cap, "stop once a set of this size is found");
    falsify->add_option("--out", out_path, "report file (default: stdout)");

    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "replay a report and recheck its claims");
    verify->add_option("report", report_path, "report file to verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    if (*construct2) {
        Stopwatch watch;
        ColoringSpec c = resolve_coloring(coloring_path, k, seed);
        sumsets::PairRun run = sumsets::run_pair_pipeline(c.k, c, m);
        report_json report =
            sumsets::construct2_report(c.k, m, c, run, watch.milliseconds());
        emit(report, out_path);
        std::cerr << "construct2: k=" << c.k << " (a,b)=(" << run.plan.a << "," << run.plan.b
                  << ") m=" << m << " multisets=" << run.report.multisets_checked
                  << " monochromatic=" << (run.report.monochromatic ? "true" : "false") << "\n";
        return run.report.monochromatic ? kOk : kVerificationFailure;
    }

    if (*construct_t) {
        Stopwatch watch;
        ColoringSpec c = resolve_coloring(coloring_path, k, seed);
        sumsets::LineRun run = sumsets::run_line_pipeline(t, c, m, length_cap);
        report_json report =
            sumsets::construct_t_report(t, m, length_cap, c, run, watch.milliseconds());
        emit(report, out_path);
        std::cerr << "construct-t: t=" << t << " k=" << c.k << " N=" << run.word_length
                  << " m=" << m << " multisets=" << run.report.multisets_checked
                  << " monochromatic=" << (run.report.monochromatic ? "true" : "false") << "\n";
        return run.report.monochromatic ? kOk : kVerificationFailure;
    }

    if (*reduce) {
        Stopwatch watch;
        ColoringSpec c = resolve_coloring(coloring_path, k, seed);
        std::vector<sumsets::Pattern> pi = parse_pattern_flags(pattern_flags);
        sumsets::ReductionResult res = sumsets::find_homogeneous_set(c, pi, basis_size, m);
        report_json report = sumsets::reduce_report(pi, basis_size, m, c, res,
                                                    watch.milliseconds());
        emit(report, out_path);
        std::cerr << "reduce: B=" << basis_size << " m=" << m
                  << " tuples_verified=" << res.witness_certificate.size() << "\n";
        return kOk;
    }

    if (*hj_search) {
        Stopwatch watch;
        ColoringSpec c = resolve_coloring(coloring_path, k, seed);
        std::vector<sumsets::Pattern> alphabet = sumsets::compositions(t);
        const int p = static_cast<int>(alphabet.size());
        for (int length = 1; length <= length_cap; ++length) {
            auto word_color = [&](const std::vector<int>& w) {
                return sumsets::induced_word_color(c, alphabet, w);
            };
            std::optional<sumsets::Line> line =
                sumsets::find_monochromatic_line(p, length, word_color);
            if (!line)
                continue;
            int color = sumsets::induced_word_color(c, alphabet, line->point(0));
            report_json report = sumsets::hj_search_report(t, length_cap, c, length, *line,
                                                           alphabet, color, watch.milliseconds());
            emit(report, out_path);
            std::cerr << "hj-search: t=" << t << " N=" << length << " color=" << color << "\n";
            return kOk;
        }
        throw sumsets::search_exhausted("cap exceeded: no monochromatic line up to word length " +
                                        std::to_string(length_cap));
    }

    if (*falsify) {
        Stopwatch watch;
        if (int_coloring_name == "seeded" && (!k || !seed))
            throw std::invalid_argument("seeded integer coloring needs --k and --seed");
        sumsets::IntColoring c =
            sumsets::named_int_coloring(int_coloring_name, k.value_or(0), seed.value_or(0));
        if (size_cap == 0)
            size_cap = bound;
        sumsets::SumsetSearchResult res = sumsets::max_mono_sumset(c, bound, size_cap);
        report_json report = sumsets::falsify_report(int_coloring_name, c.k, seed, bound,
                                                     size_cap, res, watch.milliseconds());
        emit(report, out_path);
        std::cerr << "falsify: M=" << bound << " best_size=" << res.best_size
                  << " color=" << res.color
                  << " exhaustive=" << (res.exhaustive ? "true" : "false") << "\n";
        return kOk;
    }

    // verify
    sumsets::VerifyOutcome outcome = sumsets::verify_report(load_json(report_path));
    if (outcome.ok) {
        std::cerr << "verify: all claims check out\n";
        return kOk;
    }
    for (const auto& note : outcome.notes)
        std::cerr << "verify: " << note << "\n";
    return kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sumsets::search_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const sumsets::verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}
