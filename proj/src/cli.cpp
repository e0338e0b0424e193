#include "lexdual/cli.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lexdual/duality.hpp"
#include "lexdual/error.hpp"
#include "lexdual/macaulay.hpp"
#include "lexdual/segments.hpp"
#include "lexdual/sweep.hpp"

namespace lexdual::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw error(errc::parse_error, "at position " + std::to_string(pos) + ": " + what);
}

std::uint64_t read_number(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        auto digit = static_cast<std::uint64_t>(text[pos] - '0');
        if (value > (std::numeric_limits<Exponent>::max() - digit) / 10) parse_fail(start, "number too large");
        value = value * 10 + digit;
        ++pos;
    }
    if (pos == start) {
        if (pos < text.size() && text[pos] == '-') parse_fail(pos, "negative values are not allowed");
        parse_fail(pos, "expected a nonnegative integer");
    }
    return value;
}

Monomial parse_exponent_vector(std::string_view text) {
    std::vector<Exponent> exps;
    std::size_t pos = 0;
    while (true) {
        exps.push_back(static_cast<Exponent>(read_number(text, pos)));
        if (pos == text.size()) break;
        if (text[pos] != ',') parse_fail(pos, std::string("unexpected '") + text[pos] + "'");
        ++pos;
    }
    return Monomial(std::move(exps));
}

Monomial parse_letters(std::string_view text, std::size_t n) {
    if (n < 1 || n > 26) throw error(errc::parse_error, "letter form needs 1 <= --n <= 26");
    std::vector<Exponent> exps(n, 0);
    if (text == "1") return Monomial(std::move(exps));
    std::size_t pos = 0;
    while (true) {
        if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos]))) {
            parse_fail(pos, "expected a variable letter");
        }
        auto var = static_cast<std::size_t>(text[pos] - 'a');
        if (var >= n) parse_fail(pos, std::string("variable '") + text[pos] + "' is beyond --n " + std::to_string(n));
        ++pos;
        std::uint64_t e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = read_number(text, pos);
        }
        exps[var] += static_cast<Exponent>(e);
        if (pos == text.size()) break;
        if (text[pos] != '*') parse_fail(pos, std::string("unexpected '") + text[pos] + "'");
        ++pos;
    }
    return Monomial(std::move(exps));
}

BigCount parse_count(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw error(errc::parse_error, "'" + text + "' is not a nonnegative integer");
    }
    return BigCount(text);
}

std::vector<Coefficient> parse_set(const std::string& text) {
    std::vector<Coefficient> out;
    std::string_view view(text);
    if (view.size() >= 2 && view.front() == '{' && view.back() == '}') view = view.substr(1, view.size() - 2);
    std::size_t pos = 0;
    while (true) {
        out.push_back(static_cast<Coefficient>(read_number(view, pos)));
        if (pos == view.size()) break;
        if (view[pos] != ',') parse_fail(pos, std::string("unexpected '") + view[pos] + "'");
        ++pos;
    }
    return out;
}

json count_json(const BigCount& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

json coeffs_json(std::span<const Coefficient> v) { return json(std::vector<Coefficient>(v.begin(), v.end())); }

SegmentKind parse_kind(const std::string& kind) {
    return kind == "ideal" ? SegmentKind::ideal : SegmentKind::quotient;
}

std::string tuple(std::span<const Coefficient> v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    out << ')';
    return out.str();
}

std::string window_str(const VariableWindow& w) {
    return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

// What a subcommand produced, before choosing text or JSON output.
struct Outcome {
    std::string text;
    json input = json::object();
    json result;
    std::string ref;
    int status = exit_code::ok;
};

}  // namespace

Monomial parse_monomial(std::string_view text, std::optional<std::size_t> n_hint) {
    if (text.empty()) throw error(errc::parse_error, "empty monomial");
    bool letters = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isalpha(c); });
    if (!letters) {
        auto m = parse_exponent_vector(text);
        if (n_hint && *n_hint != m.num_vars()) {
            throw error(errc::parse_error, "exponent vector has " + std::to_string(m.num_vars()) +
                                               " entries but --n is " + std::to_string(*n_hint));
        }
        return m;
    }
    if (!n_hint) throw error(errc::parse_error, "letter-form monomials need --n");
    return parse_letters(text, *n_hint);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lex segments, Macaulay representations and ideal/quotient coefficient duality", "lexdual"};
    app.require_subcommand(1);

    bool as_json = false;
    std::size_t n_hint = 0;
    app.add_flag("--json", as_json, "Emit a single JSON object");
    app.add_option("--n", n_hint, "Variable count for letter-form monomials");

    auto add_sub = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    std::string count_text;
    std::string kind = "ideal";
    std::string m_text;
    std::string set_text;
    std::string from = "ideal";
    std::size_t p = 0;
    std::size_t delta = 0;
    bool inclusive = false;
    sweep::Config cfg;

    auto* macrep = add_sub("macrep", "Macaulay representation of <s> of length <p>");
    macrep->add_option("s", count_text)->required();
    macrep->add_option("p", p)->required()->check(CLI::PositiveNumber);

    auto* growth = add_sub("growth", "Hilbert function growth bound in the next degree");
    growth->add_option("--kind", kind)->check(CLI::IsMember({"ideal", "quotient"}))->required();
    growth->add_option("--delta", delta);
    growth->add_option("s", count_text)->required();

    auto add_segment_opts = [&](CLI::App* sub) {
        sub->add_option("--kind", kind)->check(CLI::IsMember({"ideal", "quotient"}))->required();
        sub->add_flag("--inclusive", inclusive);
        sub->add_option("--m", m_text)->required();
    };
    auto* dim = add_sub("dim", "Dimension of an ideal or quotient segment");
    add_segment_opts(dim);
    auto* decompose_cmd = add_sub("decompose", "Decompose an exclusive segment into monomial spaces");
    add_segment_opts(decompose_cmd);
    auto* multiply = add_sub("multiply", "Segment obtained after multiplying by all variables");
    add_segment_opts(multiply);

    auto* coeffs = add_sub("coeffs", "Ideal and quotient coefficients of a monomial");
    coeffs->add_option("--m", m_text)->required();
    auto* partition = add_sub("partition", "Check that the coefficient sets partition {0..n+delta-2}");
    partition->add_option("--m", m_text)->required();

    auto* reconstruct = add_sub("reconstruct", "Monomial with a given coefficient set");
    reconstruct->add_option("--set", set_text)->required();
    reconstruct->add_option("--p", p)->required();
    reconstruct->add_option("--from", from)->check(CLI::IsMember({"ideal", "quotient"}));

    auto* rank_cmd = add_sub("rank", "1-based position in lex-descending order");
    rank_cmd->add_option("--m", m_text)->required();
    auto* unrank_cmd = add_sub("unrank", "Monomial at a 1-based lex position");
    unrank_cmd->add_option("--q", count_text)->required();
    unrank_cmd->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
    // --n is shared with the letter-form flag on the parent

    auto* verify = add_sub("verify", "Exhaustive oracle sweep over small (n, delta)");
    verify->add_option("--max-n", cfg.max_n)->check(CLI::Range(1, 8));
    verify->add_option("--max-delta", cfg.max_delta)->check(CLI::Range(1, 10));
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--samples", cfg.samples_per_cell, "Random ideals per cell");
    verify->add_option("--unique-max-s", cfg.uniqueness_max_s, "Macaulay uniqueness search bound on s")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--unique-max-p", cfg.uniqueness_max_p, "Macaulay uniqueness length bound; 0 skips");
    verify->add_flag("!--no-spot", cfg.spot_cases, "Skip the (4,4) and (6,8) worked-example cells");
    bool serial = false;
    verify->add_flag("--serial", serial, "Use the single-threaded reference driver");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    }

    auto hint = n_hint ? std::optional<std::size_t>(n_hint) : std::nullopt;
    auto monomial = [&] { return parse_monomial(m_text, hint); };
    auto segment = [&] {
        auto m = monomial();
        return parse_kind(kind) == SegmentKind::ideal ? SegmentSpec::ideal(m, inclusive)
                                                      : SegmentSpec::quotient(m, inclusive);
    };
    auto segment_json = [&](const SegmentSpec& seg) {
        return json{{"kind", to_string(seg.kind)}, {"inclusive", seg.inclusive},
                    {"m", seg.m.to_exponent_string()}, {"n", seg.num_vars()}, {"delta", seg.degree()}};
    };

    Outcome o;
    try {
        if (*macrep) {
            auto s = parse_count(count_text);
            auto rep = macaulay_rep(s, p);
            o.input = {{"s", count_json(s)}, {"p", p}};
            o.result = coeffs_json(rep.descending());
            o.text = rep.to_string();
            o.ref = "greedy Macaulay representation";
        } else if (*growth) {
            auto s = parse_count(count_text);
            BigCount bound;
            if (kind == "ideal") {
                if (!n_hint) throw error(errc::invalid_input, "growth --kind ideal needs --n");
                bound = ideal_growth_bound(s, n_hint);
                o.input = {{"kind", kind}, {"s", count_json(s)}, {"n", n_hint}};
                o.ref = "lower bound on ideal growth in the next degree";
            } else {
                if (delta < 1) throw error(errc::invalid_input, "growth --kind quotient needs --delta >= 1");
                bound = quotient_growth_bound(s, delta);
                o.input = {{"kind", kind}, {"s", count_json(s)}, {"delta", delta}};
                o.ref = "upper bound on quotient growth in the next degree";
            }
            o.result = count_json(bound);
            o.text = bound.str();
        } else if (*dim) {
            auto seg = segment();
            auto d = segment_dimension(seg);
            o.input = segment_json(seg);
            o.result = count_json(d);
            o.text = d.str();
            o.ref = "segment dimension from coarse/fine tails";
        } else if (*decompose_cmd) {
            auto seg = segment();
            auto d = decompose(seg);
            o.input = segment_json(seg);
            o.result = json::array();
            std::ostringstream text;
            for (std::size_t i = 0; i < d.summands.size(); ++i) {
                const auto& s = d.summands[i];
                auto sd = s.dimension();
                text << (i ? "\n" : "") << s.prefix.to_string() << " | " << window_str(s.window) << " | "
                     << s.degree << " | " << sd.str();
                o.result.push_back({{"prefix", s.prefix.to_exponent_string()},
                                    {"window", {s.window.lo, s.window.hi}},
                                    {"degree", s.degree},
                                    {"dim", count_json(sd)}});
            }
            o.text = text.str();
            o.ref = "structure of lex segments as sums of monomial spaces";
        } else if (*multiply) {
            auto seg = segment();
            auto grown = multiply_segment(seg);
            o.input = segment_json(seg);
            o.result = segment_json(grown);
            o.result["dim"] = count_json(segment_dimension(grown));
            o.text = grown.m.to_exponent_string();
            o.ref = "lex segments stay lex segments after multiplying by S_1";
        } else if (*coeffs || *partition) {
            auto m = monomial();
            o.input = {{"m", m.to_exponent_string()}, {"n", m.num_vars()}, {"delta", m.degree()}};
            if (*coeffs) {
                auto s = ideal_coefficients(m);
                auto t = quotient_coefficients(m);
                o.result = {{"S", coeffs_json(s.descending())}, {"T", coeffs_json(t.descending())}};
                o.text = "S=" + tuple(s.descending()) + "\nT=" + tuple(t.descending());
                o.ref = "ideal and quotient coefficients from tails";
            } else {
                CoefficientSets sets;
                bool ok = true;
                try {
                    sets = coefficient_sets(m);
                } catch (const error& e) {
                    if (e.code() != errc::internal) throw;
                    ok = false;
                }
                o.result = {{"S", sets.ideal}, {"T", sets.quotient}, {"partition", ok}};
                o.text = "S=" + format_set(sets.ideal) + " T=" + format_set(sets.quotient) +
                         " partition=" + (ok ? "ok" : "FAIL");
                o.status = ok ? exit_code::ok : exit_code::verification_failure;
                o.ref = "ideal and quotient coefficients partition {0..n+delta-2}";
            }
        } else if (*reconstruct) {
            auto set = parse_set(set_text);
            auto pc = static_cast<Coefficient>(p);
            auto m = from == "ideal" ? reconstruct_from_ideal_set(set, pc) : reconstruct_from_quotient_set(set, pc);
            o.input = {{"set", set}, {"p", p}, {"from", from}};
            o.result = {{"m", m.to_exponent_string()}, {"n", m.num_vars()}, {"delta", m.degree()}};
            o.text = m.to_exponent_string();
            o.ref = "exponents recovered from a coefficient set";
        } else if (*rank_cmd) {
            auto m = monomial();
            auto r = rank(m);
            o.input = {{"m", m.to_exponent_string()}};
            o.result = count_json(r);
            o.text = r.str();
            o.ref = "rank as one plus the ideal segment dimension";
        } else if (*unrank_cmd) {
            if (!n_hint) throw error(errc::invalid_input, "unrank needs --n");
            auto q = parse_count(count_text);
            auto m = unrank(q, n_hint, delta);
            o.input = {{"q", count_json(q)}, {"n", n_hint}, {"delta", delta}};
            o.result = m.to_exponent_string();
            o.text = m.to_exponent_string();
            o.ref = "rank as one plus the ideal segment dimension";
        } else if (*verify) {
            auto report = serial ? sweep::run_serial(cfg) : sweep::run_parallel(cfg);
            std::ostringstream text;
            o.result = json::array();
            for (const auto& c : report.checks) {
                text << sweep::format_line(c) << "\n";
                o.result.push_back({{"n", c.n}, {"delta", c.delta}, {"property", c.property},
                                    {"status", c.ok ? "ok" : "FAIL"}, {"checked", c.checked},
                                    {"detail", c.detail}});
            }
            text << "summary checks=" << report.checks.size() << " failures=" << report.failures()
                 << " random_samples=" << report.random_samples << " seed=" << report.seed;
            o.input = {{"max_n", cfg.max_n}, {"max_delta", cfg.max_delta}, {"seed", cfg.seed},
                       {"samples_per_cell", cfg.samples_per_cell}};
            o.text = text.str();
            o.ref = "brute-force enumeration of every formula on small cases";
            o.status = report.ok() ? exit_code::ok : exit_code::verification_failure;
        }
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == errc::parse_error ? exit_code::usage : exit_code::domain_failure;
    }

    if (as_json) {
        out << json{{"input", o.input}, {"result", o.result}, {"paper_ref", o.ref}}.dump() << "\n";
    } else {
        out << o.text << "\n";
    }
    return o.status;
}

}  // namespace lexdual::cli
