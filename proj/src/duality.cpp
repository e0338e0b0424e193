#include "lexdual/duality.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lexdual/error.hpp"

namespace lexdual {

namespace {

void require_positive_degree(const Monomial& m) {
    if (m.is_unit()) throw error(errc::undefined_on_unit, "coefficients need a monomial of positive degree");
}

std::vector<Coefficient> sorted_descending(std::vector<Coefficient> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Validates a coefficient set and returns it in increasing order.
std::vector<Coefficient> checked_ascending(std::span<const Coefficient> set, Coefficient p) {
    if (set.empty()) throw error(errc::invalid_input, "coefficient set must be nonempty");
    if (p < 1 || static_cast<Coefficient>(set.size()) > p) {
        throw error(errc::invalid_input, "coefficient set size must lie in [1, p]");
    }
    std::vector<Coefficient> v(set.begin(), set.end());
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw error(errc::invalid_input, "coefficient set has repeated elements");
    }
    if (v.front() < 0 || v.back() > p) {
        throw error(errc::invalid_input, "coefficient set must lie within [0, p]");
    }
    return v;
}

}  // namespace

MacaulayRep ideal_coefficients(const Monomial& m) {
    require_positive_degree(m);
    const auto n = m.num_vars();
    std::vector<Coefficient> coeffs;
    coeffs.reserve(n - 1);
    // s_i = i + deg(ct_{n-i}(m)) - 1, most significant (i = n-1) first
    for (std::size_t i = n - 1; i >= 1; --i) {
        auto tail_degree = static_cast<Coefficient>(coarse_tail(m, n - i).degree());
        coeffs.push_back(static_cast<Coefficient>(i) + tail_degree - 1);
    }
    return MacaulayRep(std::move(coeffs));
}

MacaulayRep quotient_coefficients(const Monomial& m) {
    require_positive_degree(m);
    const auto n = static_cast<Coefficient>(m.num_vars());
    const auto delta = m.degree();
    std::vector<Coefficient> coeffs;
    coeffs.reserve(delta);
    // t_i = n - min(ft_{delta-i}(m)) + i - 1
    for (std::uint64_t i = delta; i >= 1; --i) {
        auto low = static_cast<Coefficient>(min_index(fine_tail(m, delta - i)));
        coeffs.push_back(n - low + static_cast<Coefficient>(i) - 1);
    }
    return MacaulayRep(std::move(coeffs));
}

bool CoefficientSets::is_partition() const {
    if (ideal.size() + 1 != n || quotient.size() != delta) return false;
    std::vector<Coefficient> all(ideal);
    all.insert(all.end(), quotient.begin(), quotient.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[k] != static_cast<Coefficient>(k)) return false;
    }
    return true;
}

CoefficientSets coefficient_sets(const Monomial& m) {
    auto s = ideal_coefficients(m);
    auto t = quotient_coefficients(m);
    CoefficientSets sets{m.num_vars(), static_cast<std::size_t>(m.degree()),
                         sorted_descending({s.descending().begin(), s.descending().end()}),
                         sorted_descending({t.descending().begin(), t.descending().end()})};
    if (!sets.is_partition()) {
        throw error(errc::internal, "ideal and quotient coefficients of " + m.to_string() +
                                        " do not partition {0..n+delta-2}");
    }
    return sets;
}

std::string format_set(std::span<const Coefficient> descending) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < descending.size(); ++k) {
        if (k) out << ',';
        out << descending[k];
    }
    out << '}';
    return out.str();
}

namespace {

std::vector<Coefficient> with_extra(std::span<const Coefficient> v, Coefficient extra) {
    std::vector<Coefficient> out(v.begin(), v.end());
    out.push_back(extra);
    return sorted_descending(std::move(out));
}

}  // namespace

InheritanceReport shift_inheritance_check(const Monomial& m) {
    require_positive_degree(m);
    const auto base = coefficient_sets(m);
    const auto fresh = static_cast<Coefficient>(base.n + base.delta) - 1;
    const auto multiplied = coefficient_sets(m.times_variable(1));
    const auto shifted = coefficient_sets(shift(m, 1));

    InheritanceReport report;
    report.ideal_kept_by_x1 = multiplied.ideal == base.ideal;
    report.quotient_grows_by_x1 = multiplied.quotient == with_extra(base.quotient, fresh);
    report.quotient_kept_by_shift = shifted.quotient == base.quotient;
    report.ideal_grows_by_shift = shifted.ideal == with_extra(base.ideal, fresh);

    auto note = [&](bool ok, const char* what) {
        if (!ok) report.failures.push_back(std::string(what) + " fails for " + m.to_string());
    };
    note(report.ideal_kept_by_x1, "S(x1 m) = S(m)");
    note(report.quotient_grows_by_x1, "T(x1 m) = T(m) + {n+delta-1}");
    note(report.quotient_kept_by_shift, "T(shift m) = T(m)");
    note(report.ideal_grows_by_shift, "S(shift m) = S(m) + {n+delta-1}");
    return report;
}

Monomial reconstruct_from_ideal_set(std::span<const Coefficient> set, Coefficient p) {
    const auto s = checked_ascending(set, p);  // s[0] = s_1
    const std::size_t n = s.size() + 1;
    const Coefficient delta = p - static_cast<Coefficient>(n) + 2;
    std::vector<Exponent> exps(n, 0);
    // alpha_1 = n + delta - 2 - s_{n-1}, alpha_n = s_1,
    // alpha_i = s_{n-i+1} - s_{n-i} - 1
    exps[0] = static_cast<Exponent>(static_cast<Coefficient>(n) + delta - 2 - s.back());
    exps[n - 1] += static_cast<Exponent>(s.front());
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        exps[i - 1] = static_cast<Exponent>(s[n - i] - s[n - i - 1] - 1);
    }
    Monomial m(std::move(exps));
    if (static_cast<Coefficient>(m.degree()) != delta) {
        throw error(errc::internal, "reconstructed monomial has the wrong degree");
    }
    return m;
}

Monomial reconstruct_from_quotient_set(std::span<const Coefficient> set, Coefficient p) {
    const auto t = checked_ascending(set, p);  // t[0] = t_1
    const auto delta = static_cast<Coefficient>(t.size());
    const Coefficient n = p - delta + 2;
    std::vector<std::size_t> indices;
    indices.reserve(t.size());
    // j_i = n - t_{delta-i+1} + delta - i
    for (Coefficient i = 1; i <= delta; ++i) {
        indices.push_back(static_cast<std::size_t>(n - t[static_cast<std::size_t>(delta - i)] + delta - i));
    }
    return Monomial::from_factorization(static_cast<std::size_t>(n), indices);
}

BigCount rank(const Monomial& m) { return eval_rep(ideal_coefficients(m)) + 1; }

BigCount rank_from_quotient(const Monomial& m) {
    const auto n = static_cast<std::int64_t>(m.num_vars());
    const auto delta = static_cast<std::int64_t>(m.degree());
    return binom(n + delta - 1, delta) - eval_rep(quotient_coefficients(m));
}

Monomial unrank(const BigCount& q, std::size_t n, std::size_t delta) {
    if (n < 1 || delta < 1) throw error(errc::invalid_input, "unrank needs n >= 1 and delta >= 1");
    const auto total = space_dimension(n, static_cast<std::int64_t>(delta));
    if (q < 1 || q > total) {
        throw error(errc::invalid_input, "rank " + q.str() + " outside [1, " + total.str() + "]");
    }
    if (n == 1) return Monomial::power(1, 1, static_cast<Exponent>(delta));
    // The greedy representation of q-1 is the ideal coefficient tuple.
    auto rep = macaulay_rep(q - 1, n - 1);
    std::vector<Coefficient> set(rep.descending().begin(), rep.descending().end());
    return reconstruct_from_ideal_set(set, static_cast<Coefficient>(n + delta) - 2);
}

}  // namespace lexdual
