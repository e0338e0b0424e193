#pragma once

#include <span>
#include <string>
#include <vector>

#include "lexdual/macaulay.hpp"
#include "lexdual/monomial.hpp"

namespace lexdual {

// Ideal coefficients (s_{n-1}, ..., s_1) of m: the (n-1)-th Macaulay
// representation of dim I(m), read straight off the coarse tails.
// Length n-1 (empty for n = 1).
MacaulayRep ideal_coefficients(const Monomial& m);
// Quotient coefficients (t_delta, ..., t_1): the delta-th Macaulay
// representation of dim Q(m), read off the fine tails.
MacaulayRep quotient_coefficients(const Monomial& m);

struct CoefficientSets {
    std::size_t n = 0;
    std::size_t delta = 0;
    // Both stored in decreasing order.
    std::vector<Coefficient> ideal;
    std::vector<Coefficient> quotient;

    // Disjoint and covering {0, ..., n + delta - 2}.
    bool is_partition() const;
};

// Throws errc::internal if the two sets fail to partition.
CoefficientSets coefficient_sets(const Monomial& m);

// `{6,3,1}`
std::string format_set(std::span<const Coefficient> descending);

struct InheritanceReport {
    bool ideal_kept_by_x1 = false;       // S(x_1 m) = S(m)
    bool quotient_grows_by_x1 = false;   // T(x_1 m) = T(m) + {n+delta-1}
    bool quotient_kept_by_shift = false; // T(sigma_1 m) = T(m)
    bool ideal_grows_by_shift = false;   // S(sigma_1 m) = S(m) + {n+delta-1}
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

InheritanceReport shift_inheritance_check(const Monomial& m);

// The unique monomial in n = |set|+1 variables of degree p-n+2 whose ideal
// coefficient set is `set`. Element order is irrelevant.
Monomial reconstruct_from_ideal_set(std::span<const Coefficient> set, Coefficient p);
// The unique monomial of degree |set| in p-|set|+2 variables whose quotient
// coefficient set is `set`.
Monomial reconstruct_from_quotient_set(std::span<const Coefficient> set, Coefficient p);

// 1-based position of m in the lex-descending order of its graded piece.
BigCount rank(const Monomial& m);
// Same rank, computed from the quotient side.
BigCount rank_from_quotient(const Monomial& m);
Monomial unrank(const BigCount& q, std::size_t n, std::size_t delta);

}  // namespace lexdual
