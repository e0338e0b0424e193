#include "lexdual/sweep.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lexdual/duality.hpp"
#include "lexdual/error.hpp"
#include "lexdual/monomial.hpp"
#include "lexdual/oracle.hpp"
#include "lexdual/segments.hpp"

namespace lexdual::sweep {

namespace {

using oracle::span_multiply;

// Accumulates pass counts per property and keeps the first failure message.
class Tally {
public:
    Tally(std::size_t n, std::size_t delta) : n_(n), delta_(delta) {}

    void expect(const std::string& property, bool ok, const std::function<std::string()>& why) {
        auto& c = slot(property);
        ++c.checked;
        if (!ok && c.ok) {
            c.ok = false;
            c.detail = why();
        }
    }

    // Runs `body`; an exception counts as a failure of `property`.
    void guarded(const std::string& property, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(property, false, [&] { return std::string("exception: ") + e.what(); });
        }
    }

    std::vector<Check> finish() {
        std::vector<Check> out;
        for (auto& name : order_) {
            auto c = checks_.at(name);
            if (c.ok) c.detail = "checked=" + std::to_string(c.checked);
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    Check& slot(const std::string& property) {
        auto it = checks_.find(property);
        if (it == checks_.end()) {
            order_.push_back(property);
            it = checks_.emplace(property, Check{n_, delta_, property, true, 0, {}}).first;
        }
        return it->second;
    }

    std::size_t n_;
    std::size_t delta_;
    std::vector<std::string> order_;
    std::map<std::string, Check> checks_;
};

std::string str(const Monomial& m) { return m.to_string(); }

std::string seg_str(const SegmentSpec& seg) {
    std::ostringstream out;
    out << (seg.kind == SegmentKind::ideal ? "I" : "Q") << (seg.inclusive ? "bar" : "") << "_["
        << seg.window.lo << "," << seg.window.hi << "](" << seg.m.to_string() << ")";
    return out.str();
}

std::vector<Monomial> materialize_all(const Decomposition& d) {
    std::vector<Monomial> out;
    for (const auto& s : d.summands) {
        auto part = oracle::materialize(s, d.num_vars);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Sorted copy; the size is compared with the raw size to detect overlaps.
std::vector<Monomial> normalized(std::vector<Monomial> ms) {
    oracle::normalize(ms);
    return ms;
}

// Number of k-subsets of {0..top} found by walking bitmasks.
std::uint64_t count_subsets(std::size_t top, std::size_t k) {
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << (top + 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) == k) ++count;
    }
    return count;
}

std::vector<Coefficient> as_set(const MacaulayRep& rep) {
    return {rep.descending().begin(), rep.descending().end()};
}

void check_order_and_monomials(Tally& t, const oracle::EnumeratedSpace& space) {
    const auto& ms = space.monomials;
    const auto n = space.n;
    const auto delta = space.delta;

    t.expect("space_enumeration",
             BigCount(ms.size()) == space_dimension(n, static_cast<std::int64_t>(delta)),
             [&] { return "size " + std::to_string(ms.size()) + " != binom"; });
    for (std::size_t a = 0; a < ms.size(); ++a) {
        for (std::size_t b = 0; b < ms.size(); ++b) {
            auto expected = a < b ? LexOrder::larger : a == b ? LexOrder::equal : LexOrder::smaller;
            t.expect("lex_total_order", lex_compare(ms[a], ms[b]) == expected,
                     [&] { return str(ms[a]) + " vs " + str(ms[b]); });
        }
    }

    for (std::size_t k = 0; k < ms.size(); ++k) {
        const auto& m = ms[k];
        auto factors = standard_factorization(m);
        t.expect("factorization_roundtrip",
                 factors.size() == delta && std::is_sorted(factors.begin(), factors.end()) &&
                     Monomial::from_factorization(n, factors) == m,
                 [&] { return str(m); });

        for (std::size_t i = 0; i < n; ++i) {
            auto ct = coarse_tail(m, i);
            bool ok = true;
            for (std::size_t v = 1; v <= n; ++v) ok &= ct.exponent(v) == (v <= i ? 0 : m.exponent(v));
            t.expect("coarse_tail", ok, [&] { return str(m) + " i=" + std::to_string(i); });
        }
        for (std::size_t i = 0; i <= delta; ++i) {
            auto ft = fine_tail(m, i);
            std::span<const std::size_t> head(factors.data(), i);
            t.expect("fine_tail",
                     ft.degree() == delta - i && ft * Monomial::from_factorization(n, head) == m,
                     [&] { return str(m) + " i=" + std::to_string(i); });
        }
        for (std::int64_t i = 0; i <= 2; ++i) {
            auto sh = shift(m, i);
            auto off = static_cast<std::size_t>(i);
            t.expect("shift",
                     sh.num_vars() == n + off && sh.degree() == delta &&
                         (delta == 0 || (min_index(sh) == min_index(m) + off &&
                                         max_index(sh) == max_index(m) + off)),
                     [&] { return str(m) + " i=" + std::to_string(i); });
        }
        if (delta == 0) continue;
        if (k == 0) {
            bool threw = false;
            try {
                predecessor(m);
            } catch (const error& e) {
                threw = e.code() == errc::no_predecessor;
            }
            t.expect("predecessor_adjacency", threw, [&] { return "no error for " + str(m); });
        } else {
            t.guarded("predecessor_adjacency", [&] {
                auto p = predecessor(m);
                t.expect("predecessor_adjacency", p == ms[k - 1],
                         [&] { return "pred(" + str(m) + ") = " + str(p); });
            });
        }
    }
}

void check_segments(Tally& t, const oracle::EnumeratedSpace& space, const oracle::EnumeratedSpace& next) {
    const auto& ms = space.monomials;
    const auto n = space.n;
    const auto delta = space.delta;
    const BigCount total = ms.size();

    for (const auto& m : ms) {
        t.guarded("segment_dimension", [&] {
            BigCount dim_i = 0;
            BigCount dim_q = 0;
            for (auto kind : {SegmentKind::ideal, SegmentKind::quotient}) {
                for (bool inclusive : {false, true}) {
                    auto seg = kind == SegmentKind::ideal ? SegmentSpec::ideal(m, inclusive)
                                                          : SegmentSpec::quotient(m, inclusive);
                    auto gens = oracle::enumerate_segment(seg);
                    auto dim = segment_dimension(seg);
                    t.expect("segment_dimension", dim == gens.size(),
                             [&] { return seg_str(seg) + " formula " + dim.str(); });
                    if (!inclusive) (kind == SegmentKind::ideal ? dim_i : dim_q) = dim;

                    // multiplication by S_1 against literal products
                    auto grown = multiply_segment(seg);
                    std::vector<Monomial> expected;
                    if (kind == SegmentKind::ideal) {
                        expected = span_multiply(gens);
                    } else {
                        auto ideal_part = oracle::complement(ms, gens);
                        expected = oracle::complement(next.monomials, span_multiply(ideal_part));
                    }
                    t.expect("multiply_segment", oracle::enumerate_segment(grown) == expected,
                             [&] { return seg_str(seg) + " -> " + seg_str(grown); });

                    // growth bounds are attained by lex segments
                    if (kind == SegmentKind::ideal && n >= 2) {
                        auto bound = ideal_growth_bound(gens.size(), n);
                        t.expect("growth_tightness", bound == expected.size(),
                                 [&] { return seg_str(seg) + " bound " + bound.str(); });
                    } else if (kind == SegmentKind::quotient) {
                        auto bound = quotient_growth_bound(gens.size(), delta);
                        t.expect("growth_tightness", bound == expected.size(),
                                 [&] { return seg_str(seg) + " bound " + bound.str(); });
                    }

                    if (inclusive) continue;

                    auto d = decompose(seg);
                    auto parts = materialize_all(d);
                    auto merged = normalized(parts);
                    auto expected_count = kind == SegmentKind::ideal ? n - 1 : delta;
                    t.expect("decomposition_partition",
                             d.summands.size() == expected_count && merged.size() == parts.size() &&
                                 merged == gens,
                             [&] { return seg_str(seg); });

                    bool monotone = true;
                    for (std::size_t i = 1; i < d.summands.size(); ++i) {
                        monotone &= kind == SegmentKind::ideal
                                        ? d.summands[i].degree <= d.summands[i - 1].degree
                                        : d.summands[i].window.lo >= d.summands[i - 1].window.lo;
                    }
                    t.expect("decomposition_monotone", monotone, [&] { return seg_str(seg); });

                    auto grown_d = multiply_decomposition(d);
                    t.expect("multiply_decomposition", grown_d.dimension() == expected.size() &&
                                                           grown_d.dimension() == segment_dimension(grown),
                             [&] { return seg_str(seg); });

                    // coefficients read off the summands
                    std::vector<Coefficient> from_summands;
                    for (std::size_t i = d.summands.size(); i >= 1; --i) {
                        const auto& s = d.summands[kind == SegmentKind::ideal ? n - 1 - i : delta - i];
                        auto c = kind == SegmentKind::ideal
                                     ? s.degree + static_cast<Coefficient>(i)
                                     : static_cast<Coefficient>(n) - static_cast<Coefficient>(s.window.lo) +
                                           static_cast<Coefficient>(i);
                        from_summands.push_back(c);
                    }
                    auto direct = kind == SegmentKind::ideal ? ideal_coefficients(m) : quotient_coefficients(m);
                    t.expect("coefficients_from_decomposition", from_summands == as_set(direct),
                             [&] { return seg_str(seg); });

                    auto split = split_once(seg);
                    auto pieces = oracle::materialize(split.space, n);
                    if (split.residual) {
                        for (const auto& r : oracle::enumerate_segment(*split.residual)) {
                            pieces.push_back(split.residual_prefix * r);
                        }
                    }
                    auto merged_split = normalized(pieces);
                    t.expect("split_once", merged_split.size() == pieces.size() && merged_split == gens,
                             [&] { return seg_str(seg); });
                }
            }
            t.expect("piece_partition", dim_i + dim_q + 1 == total,
                     [&] { return str(m) + ": " + dim_i.str() + " + " + dim_q.str() + " + 1"; });
        });

        // windows that skip variables not dividing m leave the quotient unchanged
        t.guarded("window_reduction", [&] {
            auto low = min_index(m);
            for (std::size_t lo = 1; lo <= low; ++lo) {
                SegmentSpec seg{SegmentKind::quotient, false, m, VariableWindow{lo, n}};
                auto reduced = reduce_window(seg);
                t.expect("window_reduction",
                         reduced.window.lo == low &&
                             oracle::enumerate_segment(reduced) == oracle::enumerate_segment(seg) &&
                             segment_dimension(seg) == oracle::enumerate_segment(seg).size(),
                         [&] { return seg_str(seg); });
            }
        });
    }
}

void check_duality(Tally& t, const oracle::EnumeratedSpace& space) {
    const auto& ms = space.monomials;
    const auto n = space.n;
    const auto delta = space.delta;
    const auto top = static_cast<Coefficient>(n + delta) - 2;
    std::set<std::vector<Coefficient>> images;

    for (std::size_t k = 0; k < ms.size(); ++k) {
        const auto& m = ms[k];
        t.guarded("coefficient_partition", [&] {
            auto sets = coefficient_sets(m);
            t.expect("coefficient_partition", sets.is_partition(), [&] { return str(m); });
            images.insert(sets.ideal);

            auto below = static_cast<std::size_t>(k);
            auto above = ms.size() - k - 1;
            t.expect("cross_module",
                     eval_rep(ideal_coefficients(m)) == below && eval_rep(quotient_coefficients(m)) == above,
                     [&] { return str(m); });
            bool greedy = macaulay_rep(above, delta) == quotient_coefficients(m);
            if (n >= 2) greedy &= macaulay_rep(below, n - 1) == ideal_coefficients(m);
            t.expect("greedy_matches_coefficients", greedy, [&] { return str(m); });

            if (n >= 2) {
                t.expect("reconstruct_roundtrip",
                         reconstruct_from_ideal_set(sets.ideal, top) == m &&
                             reconstruct_from_quotient_set(sets.quotient, top) == m,
                         [&] { return str(m); });
            }

            auto r = rank(m);
            t.expect("rank_unrank",
                     r == k + 1 && rank_from_quotient(m) == k + 1 && unrank(r, n, delta) == m,
                     [&] { return str(m) + " rank " + r.str(); });

            auto report = shift_inheritance_check(m);
            t.expect("shift_inheritance", report.ok(),
                     [&] { return report.failures.empty() ? str(m) : report.failures.front(); });
        });
    }

    if (n >= 2) {
        bool in_range = std::all_of(images.begin(), images.end(), [&](const auto& s) {
            return s.size() == n - 1 && s.back() >= 0 && s.front() <= top;
        });
        const auto subsets = top + 1 <= 24 ? count_subsets(static_cast<std::size_t>(top), n - 1)
                                           : binom(top + 1, static_cast<std::int64_t>(n) - 1)
                                                 .convert_to<std::uint64_t>();
        t.expect("bijection", in_range && images.size() == ms.size() && ms.size() == subsets, [&] {
            return std::to_string(images.size()) + " distinct images, " + std::to_string(subsets) + " subsets";
        });
    }
}

void check_random_ideals(Tally& t, const oracle::EnumeratedSpace& space, const Config& config,
                         std::size_t& drawn) {
    const auto n = space.n;
    const auto delta = space.delta;
    std::mt19937_64 rng(cell_seed(config.seed, n, delta));
    std::uniform_int_distribution<std::size_t> size_pick(1, space.monomials.size());
    for (std::size_t s = 0; s < config.samples_per_cell; ++s) {
        auto sample = oracle::random_ideal_sample(n, delta, size_pick(rng), rng);
        ++drawn;
        auto next = oracle::hilbert_next(sample);
        BigCount dim_ideal = sample.generators.size();
        BigCount dim_quotient = space.monomials.size() - sample.generators.size();
        bool ok = next.quotient_dim <= quotient_growth_bound(dim_quotient, delta);
        if (n >= 2) ok &= next.ideal_dim >= ideal_growth_bound(dim_ideal, n);
        t.expect("growth_random", ok, [&] {
            return std::to_string(sample.generators.size()) + " generators, next ideal dim " +
                   next.ideal_dim.str();
        });
    }
}

}  // namespace

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

std::vector<std::pair<std::size_t, std::size_t>> cells(const Config& config) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = 1; n <= config.max_n; ++n) {
        for (std::size_t d = 1; d <= config.max_delta; ++d) out.emplace_back(n, d);
    }
    if (config.spot_cases) {
        for (auto spot : {std::pair<std::size_t, std::size_t>{4, 4}, {6, 8}}) {
            if (std::find(out.begin(), out.end(), spot) == out.end()) out.push_back(spot);
        }
    }
    return out;
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, std::size_t delta) {
    // splitmix64 finalizer
    std::uint64_t z = seed ^ ((std::uint64_t{n} << 32) | delta);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Check> verify_cell(std::size_t n, std::size_t delta, const Config& config) {
    Tally t(n, delta);
    std::size_t drawn = 0;
    t.guarded("space_enumeration", [&] {
        auto space = oracle::enumerate_space(n, delta);
        auto next = oracle::enumerate_space(n, delta + 1);
        check_order_and_monomials(t, space);
        check_segments(t, space, next);
        check_duality(t, space);

        for (Coefficient s = 0; s <= static_cast<Coefficient>(space.monomials.size()); ++s) {
            t.expect("macaulay_roundtrip", eval_rep(macaulay_rep(s, delta)) == s,
                     [&] { return "s=" + std::to_string(s); });
        }
        check_random_ideals(t, space, config, drawn);
    });
    return t.finish();
}

namespace {

// Visits every strictly decreasing (s_p, ..., s_1) whose partial sums stay
// within max_s and records the value it evaluates to.
void search(std::size_t i, Coefficient upper, const BigCount& partial, Coefficient max_s,
            std::vector<Coefficient>& current, std::vector<std::vector<std::vector<Coefficient>>>& found) {
    if (i == 0) {
        auto value = partial.convert_to<std::size_t>();
        found[value].push_back(current);
        return;
    }
    const auto k = static_cast<std::int64_t>(i);
    // s_i ranges over [i-1, upper); below i-1 no room is left for s_{i-1} > ... > s_1 >= 0
    for (Coefficient c = k - 1; c < upper; ++c) {
        auto next = partial + binom(c, k);
        if (next > max_s) break;
        current.push_back(c);
        search(i - 1, c, next, max_s, current, found);
        current.pop_back();
    }
}

}  // namespace

std::vector<Check> verify_macaulay_uniqueness(Coefficient max_s, std::size_t max_p) {
    std::vector<Check> out;
    for (std::size_t p = 1; p <= max_p; ++p) {
        Check c{0, p, "macaulay_uniqueness", true, 0, {}};
        std::vector<std::vector<std::vector<Coefficient>>> found(static_cast<std::size_t>(max_s) + 1);
        std::vector<Coefficient> current;
        search(p, max_s + static_cast<Coefficient>(p) + 1, 0, max_s, current, found);
        for (Coefficient s = 0; s <= max_s; ++s) {
            const auto& hits = found[static_cast<std::size_t>(s)];
            ++c.checked;
            bool ok = hits.size() == 1 && MacaulayRep(hits.front()) == macaulay_rep(s, p);
            if (!ok && c.ok) {
                c.ok = false;
                c.detail = "s=" + std::to_string(s) + " has " + std::to_string(hits.size()) + " representations";
            }
        }
        if (c.ok) c.detail = "checked=" + std::to_string(c.checked);
        out.push_back(std::move(c));
    }
    return out;
}

Report run_serial(const Config& config) {
    Report report{config.seed, {}, 0};
    for (auto [n, delta] : cells(config)) {
        auto part = verify_cell(n, delta, config);
        report.checks.insert(report.checks.end(), part.begin(), part.end());
        report.random_samples += config.samples_per_cell;
    }
    auto unique = verify_macaulay_uniqueness(config.uniqueness_max_s, config.uniqueness_max_p);
    report.checks.insert(report.checks.end(), unique.begin(), unique.end());
    return report;
}

Report run_parallel(const Config& config) {
    const auto grid = cells(config);
    std::vector<std::vector<Check>> parts(grid.size());
    const auto count = static_cast<std::ptrdiff_t>(grid.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto [n, delta] = grid[static_cast<std::size_t>(k)];
        parts[static_cast<std::size_t>(k)] = verify_cell(n, delta, config);
    }

    Report report{config.seed, {}, grid.size() * config.samples_per_cell};
    for (auto& part : parts) report.checks.insert(report.checks.end(), part.begin(), part.end());
    auto unique = verify_macaulay_uniqueness(config.uniqueness_max_s, config.uniqueness_max_p);
    report.checks.insert(report.checks.end(), unique.begin(), unique.end());
    return report;
}

std::string format_line(const Check& check) {
    std::ostringstream out;
    if (check.n == 0) {
        out << "cell=(*," << check.delta << ")";
    } else {
        out << "cell=(" << check.n << "," << check.delta << ")";
    }
    out << " property=" << check.property << " status=" << (check.ok ? "ok" : "FAIL")
        << " detail=" << check.detail;
    return out.str();
}

}  // namespace lexdual::sweep
