#include "lexdual/monomial.hpp"

#include <numeric>
#include <sstream>

#include "lexdual/error.hpp"

namespace lexdual {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) {
        throw error(errc::invalid_input,
                    "monomials live in different variable counts (" +
                        std::to_string(a.num_vars()) + " vs " +
                        std::to_string(b.num_vars()) + ")");
    }
}

void require_non_unit(const Monomial& m, const char* what) {
    if (m.is_unit()) throw error(errc::undefined_on_unit, std::string(what) + " of the unit monomial");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw error(errc::invalid_input, "a monomial needs at least one variable");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::unit(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::power(std::size_t n, std::size_t var, Exponent e) {
    return unit(n).times_variable(var, e);
}

Monomial Monomial::from_factorization(std::size_t n, std::span<const std::size_t> indices) {
    std::vector<Exponent> exps(n, 0);
    for (auto j : indices) {
        if (j < 1 || j > n) throw error(errc::invalid_input, "factor index out of range");
        ++exps[j - 1];
    }
    return Monomial(std::move(exps));
}

Exponent Monomial::exponent(std::size_t var) const {
    if (var < 1 || var > exps_.size()) {
        throw error(errc::invalid_input, "variable index " + std::to_string(var) + " out of range");
    }
    return exps_[var - 1];
}

bool Monomial::divides(const Monomial& other) const {
    require_same_vars(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_vars(*this, other);
    auto exps = exps_;
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::times_variable(std::size_t var, Exponent e) const {
    if (var < 1 || var > exps_.size()) {
        throw error(errc::invalid_input, "variable index " + std::to_string(var) + " out of range");
    }
    auto exps = exps_;
    exps[var - 1] += e;
    return Monomial(std::move(exps));
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this)) {
        throw error(errc::invalid_input,
                    divisor.to_string() + " does not divide " + to_string());
    }
    auto exps = exps_;
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= divisor.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::widened(std::size_t n) const {
    if (n < exps_.size()) throw error(errc::invalid_input, "cannot narrow a monomial");
    auto exps = exps_;
    exps.resize(n, 0);
    return Monomial(std::move(exps));
}

std::string Monomial::to_exponent_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out << ',';
        out << exps_[i];
    }
    return out.str();
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        if (exps_.size() <= 26) {
            out << static_cast<char>('a' + i);
        } else {
            out << 'x' << (i + 1);
        }
        if (exps_[i] > 1) out << '^' << exps_[i];
    }
    return out.str();
}

LexOrder lex_compare(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? LexOrder::larger : LexOrder::smaller;
    }
    return LexOrder::equal;
}

bool VariableWindow::supports(const Monomial& m) const {
    if (hi > m.num_vars()) return false;
    auto e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::size_t var = i + 1;
        if (e[i] != 0 && (var < lo || var > hi)) return false;
    }
    return true;
}

std::vector<std::size_t> standard_factorization(const Monomial& m) {
    std::vector<std::size_t> indices;
    indices.reserve(m.degree());
    auto e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) indices.insert(indices.end(), e[i], i + 1);
    return indices;
}

std::size_t min_index(const Monomial& m) {
    require_non_unit(m, "min");
    auto e = m.exponents();
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    return i + 1;
}

std::size_t max_index(const Monomial& m) {
    require_non_unit(m, "max");
    auto e = m.exponents();
    std::size_t i = e.size();
    while (e[i - 1] == 0) --i;
    return i;
}

Monomial coarse_tail(const Monomial& m, std::size_t i) {
    if (i >= m.num_vars()) {
        throw error(errc::invalid_input, "coarse tail index " + std::to_string(i) +
                                             " outside [0, " + std::to_string(m.num_vars() - 1) + "]");
    }
    std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
    std::fill(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(i), 0);
    return Monomial(std::move(exps));
}

Monomial fine_tail(const Monomial& m, std::size_t i) {
    if (i > m.degree()) {
        throw error(errc::invalid_input, "fine tail index " + std::to_string(i) +
                                             " outside [0, " + std::to_string(m.degree()) + "]");
    }
    std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
    std::uint64_t left = i;
    for (auto& e : exps) {
        if (left == 0) break;
        Exponent take = static_cast<Exponent>(std::min<std::uint64_t>(e, left));
        e -= take;
        left -= take;
    }
    return Monomial(std::move(exps));
}

Monomial shift(const Monomial& m, std::int64_t i) {
    if (i < 0) throw error(errc::invalid_input, "negative shifts are not supported");
    auto offset = static_cast<std::size_t>(i);
    std::vector<Exponent> exps(m.num_vars() + offset, 0);
    std::copy(m.exponents().begin(), m.exponents().end(), exps.begin() + static_cast<std::ptrdiff_t>(offset));
    return Monomial(std::move(exps));
}

Monomial predecessor(const Monomial& m) {
    require_non_unit(m, "predecessor");
    if (m.exponent(1) == m.degree()) {
        throw error(errc::no_predecessor, m.to_string() + " is the lex-largest monomial of its degree");
    }
    // m = w * x_top^gamma  ->  w * x_{top-1} * x_n^{gamma-1}
    std::size_t top = max_index(m);
    Exponent gamma = m.exponent(top);
    std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
    exps[top - 1] = 0;
    exps[top - 2] += 1;
    exps.back() += gamma - 1;
    return Monomial(std::move(exps));
}

Monomial restrict_to_window(const Monomial& m, const VariableWindow& window) {
    if (window.empty() || !window.supports(m)) {
        throw error(errc::invalid_input, m.to_string() + " is not supported in the window [" +
                                             std::to_string(window.lo) + "," +
                                             std::to_string(window.hi) + "]");
    }
    auto e = m.exponents();
    return Monomial(std::vector<Exponent>(e.begin() + static_cast<std::ptrdiff_t>(window.lo - 1),
                                          e.begin() + static_cast<std::ptrdiff_t>(window.hi)));
}

Monomial lift_from_window(const Monomial& local, std::size_t lo, std::size_t n) {
    if (lo < 1 || local.num_vars() + lo - 1 != n) {
        throw error(errc::invalid_input, "window does not end at x_n");
    }
    return shift(local, static_cast<std::int64_t>(lo - 1));
}

}  // namespace lexdual
