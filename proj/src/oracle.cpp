#include "lexdual/oracle.hpp"

#include <algorithm>

#include "lexdual/error.hpp"

namespace lexdual::oracle {

namespace {

void check_cap(std::size_t n, std::size_t delta, std::uint64_t cap) {
    auto size = space_dimension(n, static_cast<std::int64_t>(delta));
    if (size > cap) {
        throw error(errc::resource_limit, "enumerating " + size.str() + " monomials exceeds the cap of " +
                                              std::to_string(cap));
    }
}

// Appends all exponent vectors with the given prefix in lex-descending order.
void fill(std::vector<Exponent>& exps, std::size_t pos, Exponent left, std::vector<Monomial>& out) {
    if (pos + 1 == exps.size()) {
        exps[pos] = left;
        out.emplace_back(exps);
        return;
    }
    for (Exponent e = left + 1; e-- > 0;) {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

bool lex_desc(const Monomial& a, const Monomial& b) { return lex_larger(a, b); }

}  // namespace

EnumeratedSpace enumerate_space(std::size_t n, std::size_t delta, std::uint64_t cap) {
    if (n < 1) throw error(errc::invalid_input, "enumeration needs at least one variable");
    check_cap(n, delta, cap);
    EnumeratedSpace space{n, delta, {}};
    std::vector<Exponent> exps(n, 0);
    fill(exps, 0, static_cast<Exponent>(delta), space.monomials);
    return space;
}

std::vector<Monomial> enumerate_segment(const SegmentSpec& seg, std::uint64_t cap) {
    seg.validate();
    const auto n = seg.num_vars();
    const auto local = enumerate_space(seg.window.size(), seg.degree(), cap);
    std::vector<Monomial> out;
    for (const auto& mu : local.monomials) {
        auto g = lift_from_window(mu, seg.window.lo, n);
        auto order = lex_compare(g, seg.m);
        bool keep = order == LexOrder::equal
                        ? seg.inclusive
                        : (order == LexOrder::larger) == (seg.kind == SegmentKind::ideal);
        if (keep) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Monomial> materialize(const Summand& s, std::size_t n, std::uint64_t cap) {
    std::vector<Monomial> out;
    if (s.degree < 0) return out;
    if (s.window.empty()) {
        if (s.degree == 0) out.push_back(s.prefix);
        return out;
    }
    for (const auto& mu : enumerate_space(s.window.size(), static_cast<std::size_t>(s.degree), cap).monomials) {
        out.push_back(s.prefix * lift_from_window(mu, s.window.lo, n));
    }
    return out;
}

void normalize(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(), lex_desc);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

std::vector<Monomial> span_multiply(std::span<const Monomial> generators) {
    std::vector<Monomial> out;
    if (generators.empty()) return out;
    const auto n = generators.front().num_vars();
    const auto degree = generators.front().degree();
    out.reserve(generators.size() * n);
    for (const auto& g : generators) {
        if (g.num_vars() != n || g.degree() != degree) {
            throw error(errc::invalid_input, "generators must share variable count and degree");
        }
        for (std::size_t i = 1; i <= n; ++i) out.push_back(g.times_variable(i));
    }
    normalize(out);
    return out;
}

std::vector<Monomial> complement(std::span<const Monomial> space, std::span<const Monomial> subset) {
    std::vector<Monomial> out;
    std::set_difference(space.begin(), space.end(), subset.begin(), subset.end(), std::back_inserter(out),
                        lex_desc);
    return out;
}

MonomialIdealSample random_ideal_sample(std::size_t n, std::size_t delta, std::size_t count,
                                        std::mt19937_64& rng) {
    auto space = enumerate_space(n, delta);
    auto& pool = space.monomials;
    count = std::min(count, pool.size());
    // partial Fisher-Yates
    for (std::size_t k = 0; k < count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, pool.size() - 1);
        std::swap(pool[k], pool[pick(rng)]);
    }
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(count), pool.end());
    normalize(pool);
    return {n, delta, std::move(pool)};
}

HilbertNext hilbert_next(const MonomialIdealSample& sample, std::uint64_t cap) {
    check_cap(sample.n, sample.delta + 1, cap);
    auto next = span_multiply(sample.generators);
    auto total = enumerate_space(sample.n, sample.delta + 1, cap).monomials.size();
    return {BigCount(next.size()), BigCount(total - next.size())};
}

}  // namespace lexdual::oracle
