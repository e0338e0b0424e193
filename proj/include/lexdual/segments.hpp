#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexdual/macaulay.hpp"
#include "lexdual/monomial.hpp"

namespace lexdual {

enum class SegmentKind { ideal, quotient };

const char* to_string(SegmentKind kind) noexcept;

// An ideal segment (monomials lex-larger than m) or quotient segment
// (lex-smaller than m) inside the degree-deg(m) monomials of `window`.
// The window always ends at x_n, where n = m.num_vars().
struct SegmentSpec {
    SegmentKind kind = SegmentKind::ideal;
    bool inclusive = false;
    Monomial m;
    VariableWindow window;

    // Segments over the full window [1, n].
    static SegmentSpec ideal(Monomial m, bool inclusive = false);
    static SegmentSpec quotient(Monomial m, bool inclusive = false);

    std::size_t num_vars() const noexcept { return m.num_vars(); }
    std::uint64_t degree() const noexcept { return m.degree(); }
    bool full_window() const noexcept { return window.lo == 1; }

    // Throws invalid_input / undefined_on_unit when the invariants fail.
    void validate() const;

    friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

// prefix * M_{[lo,hi]}^degree. Degree -1 or an empty window with positive
// degree is a trivial (zero-dimensional) summand.
struct Summand {
    Monomial prefix;
    VariableWindow window;
    std::int64_t degree = 0;

    bool trivial() const { return dimension() == 0; }
    BigCount dimension() const { return space_dimension(window.size(), degree); }

    friend bool operator==(const Summand&, const Summand&) = default;
};

struct Decomposition {
    SegmentKind kind = SegmentKind::ideal;
    std::size_t num_vars = 0;
    // Exactly n-1 summands for ideals, deg(m) for quotients; summand i at index i-1.
    std::vector<Summand> summands;

    BigCount dimension() const;
};

// One splitting step of an exclusive segment: a full monomial space plus a
// residual segment scaled by `residual_prefix`.
struct Split {
    // beta for ideals, gamma for quotients (delta+1 / n+1 in the degenerate case).
    std::uint64_t pivot = 0;
    Summand space;
    Monomial residual_prefix;
    // Empty when the residual is trivial.
    std::optional<SegmentSpec> residual;
};

Split split_once(const SegmentSpec& seg);
Decomposition decompose(const SegmentSpec& seg);
BigCount segment_dimension(const SegmentSpec& seg);
// Segment spanned by S_1 * (ideal segment), or the next-degree quotient.
SegmentSpec multiply_segment(const SegmentSpec& seg);
Decomposition multiply_decomposition(const Decomposition& d);
// Drop leading window variables that do not divide m (quotients only).
SegmentSpec reduce_window(const SegmentSpec& seg);

}  // namespace lexdual
