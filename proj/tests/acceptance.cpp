// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexdual/cli.hpp"
#include "lexdual/duality.hpp"
#include "lexdual/segments.hpp"
#include "lexdual/sweep.hpp"

using namespace lexdual;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits. All numeric comparisons are exact; only wall time has a budget.
constexpr double golden_call_budget_ms = 1.0;
constexpr double sweep_budget_s = 60.0;
constexpr std::size_t min_random_samples = 1000;
constexpr int timing_repeats = 50;

const Monomial m1{2, 1, 0, 3, 0, 2};  // a^2*b*d^3*f^2
const Monomial b2cd{0, 2, 1, 1};

struct Outcome {
    bool ok = true;
    std::string note;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " " << name;
    if (!o.note.empty()) std::cout << ": " << o.note;
    std::cout << "\n";
    if (!o.ok) ++failures;
}

Outcome guarded(const std::function<Outcome()>& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
    args.insert(args.begin(), "lexdual");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (code) *code = rc;
    return out.str();
}

// Median of repeated wall times, so one scheduler hiccup does not decide the verdict.
double median_ms(const std::function<void()>& fn) {
    std::vector<double> times;
    for (int k = 0; k < timing_repeats; ++k) {
        auto t0 = Clock::now();
        fn();
        times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    return times[times.size() / 2];
}

using coeffs = std::vector<Coefficient>;

coeffs of(const MacaulayRep& rep) { return {rep.descending().begin(), rep.descending().end()}; }

Outcome golden_dimensions() {
    Outcome o;
    auto ideal = cli_out({"dim", "--kind", "ideal", "--m", "2,1,0,3,0,2"});
    auto quotient = cli_out({"dim", "--kind", "quotient", "--m", "2,1,0,3,0,2"});
    if (ideal != "362\n" || quotient != "924\n") return {false, "cli printed " + ideal + "/" + quotient};
    BigCount i = segment_dimension(SegmentSpec::ideal(m1));
    BigCount q = segment_dimension(SegmentSpec::quotient(m1));
    if (i != 362 || q != 924 || i + q + 1 != binom(13, 8) || binom(13, 8) != 1287)
        return {false, "library values disagree"};
    double t_ideal = median_ms([] { cli_out({"dim", "--kind", "ideal", "--m", "2,1,0,3,0,2"}); });
    double t_quotient = median_ms([] { cli_out({"dim", "--kind", "quotient", "--m", "2,1,0,3,0,2"}); });
    std::ostringstream note;
    note << "362 + 924 + 1 = 1287, median " << t_ideal << " ms / " << t_quotient << " ms";
    o.note = note.str();
    o.ok = t_ideal < golden_call_budget_ms && t_quotient < golden_call_budget_ms;
    return o;
}

Outcome golden_macaulay() {
    auto rep = macaulay_rep(114, 6);
    bool ok = of(rep) == coeffs{9, 7, 5, 4, 1, 0} && eval_rep(rep) == 114;
    return {ok, "114 -> " + rep.to_string()};
}

Outcome golden_coefficients() {
    std::vector<std::string> bad;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) bad.push_back(what);
    };
    expect(of(ideal_coefficients(m1)) == coeffs{10, 8, 7, 3, 2}, "ideal(a^2bd^3f^2)");
    expect(of(quotient_coefficients(m1)) == coeffs{12, 11, 9, 6, 5, 4, 1, 0}, "quotient(a^2bd^3f^2)");
    auto sets = coefficient_sets(b2cd);
    expect(sets.ideal == coeffs{6, 3, 1} && sets.quotient == coeffs{5, 4, 2, 0}, "sets(b^2cd)");

    const Monomial e2fg = shift(b2cd, 3);
    expect(e2fg == Monomial{0, 0, 0, 0, 2, 1, 1}, "shift(b^2cd, 3)");
    expect(of(quotient_coefficients(e2fg)) == coeffs{5, 4, 2, 0}, "quotient(e^2fg)");
    expect(of(ideal_coefficients(e2fg)) == coeffs{9, 8, 7, 6, 3, 1}, "ideal(e^2fg)");

    const Monomial a3b2cd = b2cd.times_variable(1, 3);
    expect(of(ideal_coefficients(a3b2cd)) == coeffs{6, 3, 1}, "ideal(a^3b^2cd)");
    expect(of(quotient_coefficients(a3b2cd)) == coeffs{9, 8, 7, 5, 4, 2, 0}, "quotient(a^3b^2cd)");
    expect(shift_inheritance_check(b2cd).ok(), "inheritance report for b^2cd");

    Outcome o{bad.empty(), ""};
    for (const auto& b : bad) o.note += (o.note.empty() ? "mismatch: " : ", ") + b;
    return o;
}

struct Row {
    Monomial prefix;
    std::size_t lo, hi;
    std::int64_t degree;
    long dim;
};

bool matches(const Decomposition& d, const std::vector<Row>& want) {
    if (d.summands.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto& s = d.summands[i];
        if (!(s.prefix == want[i].prefix) || !(s.window == VariableWindow{want[i].lo, want[i].hi}) ||
            s.degree != want[i].degree || s.dimension() != want[i].dim)
            return false;
    }
    return true;
}

Outcome golden_decompositions() {
    bool ideal = matches(decompose(SegmentSpec::ideal(m1)), {
                                                                {Monomial{3, 0, 0, 0, 0, 0}, 1, 6, 5, 252},
                                                                {Monomial{2, 2, 0, 0, 0, 0}, 2, 6, 4, 70},
                                                                {Monomial{2, 1, 1, 0, 0, 0}, 3, 6, 4, 35},
                                                                {Monomial{2, 1, 0, 4, 0, 0}, 4, 6, 1, 3},
                                                                {Monomial{2, 1, 0, 3, 1, 0}, 5, 6, 1, 2},
                                                            });
    bool quotient = matches(decompose(SegmentSpec::quotient(m1)), {
                                                                      {Monomial{0, 0, 0, 0, 0, 0}, 2, 6, 8, 495},
                                                                      {Monomial{1, 0, 0, 0, 0, 0}, 2, 6, 7, 330},
                                                                      {Monomial{2, 0, 0, 0, 0, 0}, 3, 6, 6, 84},
                                                                      {Monomial{2, 1, 0, 0, 0, 0}, 5, 6, 5, 6},
                                                                      {Monomial{2, 1, 0, 1, 0, 0}, 5, 6, 4, 5},
                                                                      {Monomial{2, 1, 0, 2, 0, 0}, 5, 6, 3, 4},
                                                                      {Monomial{2, 1, 0, 3, 0, 0}, 7, 6, 2, 0},
                                                                      {Monomial{2, 1, 0, 3, 0, 1}, 7, 6, 1, 0},
                                                                  });
    std::string note = std::string("ideal ") + (ideal ? "ok" : "mismatch") + ", quotient " +
                       (quotient ? "ok" : "mismatch");
    return {ideal && quotient, note};
}

Outcome golden_reconstruction() {
    auto a = reconstruct_from_ideal_set(coeffs{6, 3, 1}, 6);
    auto b = reconstruct_from_quotient_set(coeffs{5, 4, 2, 0}, 6);
    return {a == b2cd && b == b2cd, a.to_string() + " / " + b.to_string()};
}

struct SweepRun {
    sweep::Report report;
    double seconds = 0;
};

bool is_growth(const std::string& p) { return p == "growth_tightness" || p == "growth_random"; }

Outcome exhaustive_sweep(const SweepRun& run) {
    std::size_t cells_checks = 0, bad = 0;
    for (const auto& c : run.report.checks) {
        if (c.n == 0) continue;
        ++cells_checks;
        if (!c.ok) {
            ++bad;
            std::cerr << sweep::format_line(c) << "\n";
        }
    }
    std::ostringstream note;
    note << cells_checks << " checks, " << bad << " failures, " << run.seconds << " s";
    return {bad == 0 && cells_checks > 0 && run.seconds < sweep_budget_s, note.str()};
}

Outcome growth_suite(const SweepRun& run) {
    std::size_t tight = 0, random = 0, bad = 0;
    for (const auto& c : run.report.checks) {
        if (!is_growth(c.property)) continue;
        (c.property == "growth_tightness" ? tight : random) += c.checked;
        if (!c.ok) ++bad;
    }
    std::ostringstream note;
    note << tight << " segment equalities, " << run.report.random_samples << " random ideals, " << bad
         << " violations";
    return {bad == 0 && tight > 0 && run.report.random_samples >= min_random_samples, note.str()};
}

Outcome uniqueness(const SweepRun& run) {
    std::size_t rows = 0, checked = 0;
    bool ok = true;
    for (const auto& c : run.report.checks) {
        if (c.property != "macaulay_uniqueness") continue;
        ++rows;
        checked += c.checked;
        ok = ok && c.ok;
    }
    std::ostringstream note;
    note << rows << " lengths, " << checked << " values";
    return {ok && rows == 8 && checked == 8 * 5001, note.str()};
}

}  // namespace

int main() {
    report(1, "golden segment dimensions", guarded(golden_dimensions));
    report(2, "golden Macaulay representation", guarded(golden_macaulay));
    report(3, "golden coefficients and inheritance", guarded(golden_coefficients));
    report(4, "golden decompositions", guarded(golden_decompositions));
    report(5, "golden reconstruction", guarded(golden_reconstruction));

    sweep::Config config;  // n <= 5, delta <= 6, s <= 5000, p <= 8
    SweepRun run;
    Outcome sweep_error{true, ""};
    try {
        auto t0 = Clock::now();
        run.report = sweep::run_parallel(config);
        run.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    } catch (const std::exception& e) {
        sweep_error = {false, std::string("exception: ") + e.what()};
    }
    if (!sweep_error.ok) {
        for (int id = 6; id <= 8; ++id) report(id, "sweep", sweep_error);
    } else {
        report(6, "exhaustive oracle sweep", exhaustive_sweep(run));
        report(7, "growth-bound suite", growth_suite(run));
        report(8, "Macaulay uniqueness", uniqueness(run));
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
