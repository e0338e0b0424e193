#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lexdual {

using Exponent = std::uint32_t;

// A monomial x_1^a_1 ... x_n^a_n over a fixed number of variables n >= 1.
// Variables are indexed 1..n everywhere in the public interface.
class Monomial {
public:
    explicit Monomial(std::vector<Exponent> exponents);
    Monomial(std::initializer_list<Exponent> exponents)
        : Monomial(std::vector<Exponent>(exponents)) {}

    static Monomial unit(std::size_t n);
    static Monomial power(std::size_t n, std::size_t var, Exponent e);
    // Inverse of standard_factorization: multiplies x_j over the given indices.
    static Monomial from_factorization(std::size_t n, std::span<const std::size_t> indices);

    std::size_t num_vars() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_unit() const noexcept { return degree_ == 0; }

    Exponent exponent(std::size_t var) const;
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial times_variable(std::size_t var, Exponent e = 1) const;
    // Throws invalid_input when `divisor` does not divide *this.
    Monomial divided_by(const Monomial& divisor) const;

    // Same exponents, zero-padded to `n >= num_vars()` variables.
    Monomial widened(std::size_t n) const;

    // `2,1,0,3,0,2`
    std::string to_exponent_string() const;
    // `a^2*b*d^3*f^2` for n <= 26, `x1^2*x2*...` otherwise; the unit prints as `1`.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

enum class LexOrder { larger, equal, smaller };

// Result describes `a` relative to `b`. Requires equal variable counts.
LexOrder lex_compare(const Monomial& a, const Monomial& b);
inline bool lex_larger(const Monomial& a, const Monomial& b) {
    return lex_compare(a, b) == LexOrder::larger;
}

// An inclusive range [lo, hi] of variable indices. `lo == hi + 1` is the
// empty window, which only appears inside decompositions.
struct VariableWindow {
    std::size_t lo = 1;
    std::size_t hi = 1;

    static VariableWindow full(std::size_t n) { return {1, n}; }

    std::size_t size() const noexcept { return hi + 1 > lo ? hi + 1 - lo : 0; }
    bool empty() const noexcept { return size() == 0; }
    // True when m has no support outside the window.
    bool supports(const Monomial& m) const;

    friend bool operator==(const VariableWindow&, const VariableWindow&) = default;
};

std::vector<std::size_t> standard_factorization(const Monomial& m);

std::size_t min_index(const Monomial& m);
std::size_t max_index(const Monomial& m);

// ct_i(m): zero the exponents of x_1..x_i. 0 <= i <= n-1.
Monomial coarse_tail(const Monomial& m, std::size_t i);
// ft_i(m): drop the i lex-earliest factors of the standard factorization.
// 0 <= i <= deg(m); i = deg(m) yields the unit.
Monomial fine_tail(const Monomial& m, std::size_t i);
// sigma_i(m): raise each variable index by i, viewed in n+i variables.
Monomial shift(const Monomial& m, std::int64_t i);
// Lex-smallest monomial of the same degree that is lex-larger than m.
Monomial predecessor(const Monomial& m);

// Re-express m, supported in `window`, as a monomial in window.size() variables.
Monomial restrict_to_window(const Monomial& m, const VariableWindow& window);
// Inverse of restrict_to_window for a window ending at x_n.
Monomial lift_from_window(const Monomial& local, std::size_t lo, std::size_t n);

}  // namespace lexdual
