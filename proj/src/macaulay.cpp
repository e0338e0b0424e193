#include "lexdual/macaulay.hpp"

#include <limits>
#include <sstream>

#include "lexdual/error.hpp"

namespace lexdual {

BigCount binom(std::int64_t top, std::int64_t bottom) {
    if (bottom < 0 || top < 0 || top < bottom) return 0;
    bottom = std::min(bottom, top - bottom);
    BigCount result = 1;
    for (std::int64_t i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;
    }
    return result;
}

BigCount space_dimension(std::size_t window_size, std::int64_t degree) {
    if (degree < 0) return 0;
    if (window_size == 0) return degree == 0 ? 1 : 0;
    return binom(static_cast<std::int64_t>(window_size) + degree - 1, degree);
}

MacaulayRep::MacaulayRep(std::vector<Coefficient> descending) : coeffs_(std::move(descending)) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] < 0) throw error(errc::invalid_rep, "negative Macaulay coefficient");
        if (k > 0 && coeffs_[k] >= coeffs_[k - 1]) {
            throw error(errc::invalid_rep, "Macaulay coefficients must strictly decrease");
        }
    }
}

Coefficient MacaulayRep::at(std::size_t i) const {
    if (i < 1 || i > coeffs_.size()) throw error(errc::invalid_input, "coefficient index out of range");
    return coeffs_[coeffs_.size() - i];
}

std::string MacaulayRep::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out << ',';
        out << coeffs_[k];
    }
    return out.str();
}

namespace {

// Largest x >= p-1 with binom(x, p) <= s.
Coefficient largest_fitting(const BigCount& s, std::int64_t p) {
    constexpr Coefficient limit = std::numeric_limits<Coefficient>::max() / 4;
    Coefficient lo = p - 1;  // binom(p-1, p) = 0 always fits
    Coefficient step = 1;
    while (binom(lo + step, p) <= s) {
        lo += step;
        if (step > limit) throw error(errc::resource_limit, "Macaulay coefficient exceeds 64 bits");
        step *= 2;
    }
    // binom(lo, p) <= s < binom(lo + step, p)
    Coefficient hi = lo + step;
    while (hi - lo > 1) {
        Coefficient mid = lo + (hi - lo) / 2;
        if (binom(mid, p) <= s) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigCount& s, std::size_t p) {
    if (s < 0) throw error(errc::invalid_input, "cannot represent a negative integer");
    if (p < 1) throw error(errc::invalid_input, "Macaulay representation length must be positive");
    std::vector<Coefficient> coeffs;
    coeffs.reserve(p);
    BigCount rest = s;
    for (auto i = static_cast<std::int64_t>(p); i >= 1; --i) {
        Coefficient c = largest_fitting(rest, i);
        rest -= binom(c, i);
        coeffs.push_back(c);
    }
    return MacaulayRep(std::move(coeffs));
}

BigCount eval_coefficients(std::span<const Coefficient> descending) {
    return eval_rep(MacaulayRep(std::vector<Coefficient>(descending.begin(), descending.end())));
}

BigCount eval_rep(const MacaulayRep& rep) {
    BigCount total = 0;
    for (std::size_t i = 1; i <= rep.length(); ++i) {
        total += binom(rep.at(i), static_cast<std::int64_t>(i));
    }
    return total;
}

BigCount quotient_growth_bound(const BigCount& s, std::size_t delta) {
    auto rep = macaulay_rep(s, delta);
    BigCount total = 0;
    for (std::size_t i = 1; i <= rep.length(); ++i) {
        auto k = static_cast<std::int64_t>(i);
        total += binom(rep.at(i) + 1, k + 1);
    }
    return total;
}

BigCount ideal_growth_bound(const BigCount& s, std::size_t n) {
    if (n < 2) throw error(errc::invalid_input, "ideal growth bound needs at least two variables");
    auto rep = macaulay_rep(s, n - 1);
    BigCount total = 0;
    for (std::size_t i = 1; i <= rep.length(); ++i) {
        auto k = static_cast<std::int64_t>(i);
        // s_i = i-1 is an empty summand; it stays empty after multiplying by S_1.
        if (rep.at(i) < k) continue;
        total += binom(rep.at(i) + 1, k);
    }
    return total;
}

}  // namespace lexdual
