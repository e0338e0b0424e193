#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexdual {

// Exact nonnegative count: dimensions, ranks, binomials.
using BigCount = boost::multiprecision::cpp_int;

using Coefficient = std::int64_t;

// binom(top, bottom), zero whenever top < bottom, top < 0 or bottom < 0.
BigCount binom(std::int64_t top, std::int64_t bottom);

// Number of degree-`degree` monomials in `window_size` variables. An empty
// window spans only the unit in degree 0; negative degrees span nothing.
BigCount space_dimension(std::size_t window_size, std::int64_t degree);

// The p-th Macaulay representation s = sum_{i=1}^p binom(s_i, i) with
// s_p > ... > s_1 >= 0. Terms with s_i < i are kept, not trimmed.
class MacaulayRep {
public:
    MacaulayRep() = default;
    // Coefficients most-significant first: (s_p, ..., s_1). Throws invalid_rep
    // unless strictly decreasing and nonnegative.
    explicit MacaulayRep(std::vector<Coefficient> descending);

    std::size_t length() const noexcept { return coeffs_.size(); }
    // s_i, 1 <= i <= length().
    Coefficient at(std::size_t i) const;
    std::span<const Coefficient> descending() const noexcept { return coeffs_; }

    // `9,7,5,4,1,0`
    std::string to_string() const;

    friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;

private:
    std::vector<Coefficient> coeffs_;
};

MacaulayRep macaulay_rep(const BigCount& s, std::size_t p);
BigCount eval_rep(const MacaulayRep& rep);
// Same sum over a raw descending list; throws invalid_rep when not strictly
// decreasing.
BigCount eval_coefficients(std::span<const Coefficient> descending);

// Upper bound on dim (S/I)_{delta+1} given dim (S/I)_delta = s.
BigCount quotient_growth_bound(const BigCount& s, std::size_t delta);
// Lower bound on dim I_{delta+1} given dim I_delta = s in n >= 2 variables.
BigCount ideal_growth_bound(const BigCount& s, std::size_t n);

}  // namespace lexdual
