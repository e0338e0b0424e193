#include "lexdual/segments.hpp"

#include <string>

#include "lexdual/error.hpp"

namespace lexdual {

const char* to_string(SegmentKind kind) noexcept {
    return kind == SegmentKind::ideal ? "ideal" : "quotient";
}

SegmentSpec SegmentSpec::ideal(Monomial m, bool inclusive) {
    auto n = m.num_vars();
    SegmentSpec seg{SegmentKind::ideal, inclusive, std::move(m), VariableWindow::full(n)};
    seg.validate();
    return seg;
}

SegmentSpec SegmentSpec::quotient(Monomial m, bool inclusive) {
    auto n = m.num_vars();
    SegmentSpec seg{SegmentKind::quotient, inclusive, std::move(m), VariableWindow::full(n)};
    seg.validate();
    return seg;
}

void SegmentSpec::validate() const {
    if (m.is_unit()) throw error(errc::undefined_on_unit, "segments need a monomial of positive degree");
    if (window.hi != m.num_vars() || window.lo < 1 || window.lo > window.hi) {
        throw error(errc::invalid_input, "segment window must be [lo, n] with 1 <= lo <= n");
    }
    if (!window.supports(m)) {
        throw error(errc::invalid_input, m.to_string() + " uses variables outside its segment window");
    }
}

BigCount Decomposition::dimension() const {
    BigCount total = 0;
    for (const auto& s : summands) total += s.dimension();
    return total;
}

namespace {

void require_exclusive(const SegmentSpec& seg) {
    seg.validate();
    if (seg.inclusive) {
        throw error(errc::unsupported, "splitting is defined for exclusive segments; "
                                       "rewrite the inclusive segment through the predecessor first");
    }
}

// Global variable index of local index j in a window starting at lo.
std::size_t global_index(std::size_t lo, std::size_t j) { return lo + j - 1; }

}  // namespace

Split split_once(const SegmentSpec& seg) {
    require_exclusive(seg);
    const auto n = seg.num_vars();
    const auto lo = seg.window.lo;
    const auto delta = seg.degree();
    const auto& m = seg.m;

    if (seg.kind == SegmentKind::ideal) {
        const Exponent lead = m.exponent(lo);
        const std::uint64_t beta = std::uint64_t{lead} + 1;
        auto head = Monomial::power(n, lo, static_cast<Exponent>(beta));
        auto residual_prefix = Monomial::power(n, lo, lead);
        if (lead == delta) {
            return {beta, Summand{head, seg.window, -1}, residual_prefix, std::nullopt};
        }
        SegmentSpec residual{SegmentKind::ideal, false, m.divided_by(residual_prefix),
                             VariableWindow{lo + 1, n}};
        return {beta, Summand{head, seg.window, static_cast<std::int64_t>(delta - beta)},
                residual_prefix, residual};
    }

    const std::size_t low = min_index(m);
    const std::uint64_t gamma = low + 1;
    Summand tail{Monomial::unit(n), VariableWindow{low + 1, n}, static_cast<std::int64_t>(delta)};
    auto residual_prefix = Monomial::power(n, low, 1);
    if (low == n || delta == 1) {
        // x_n^delta, or a degree-0 residual: nothing left to split.
        return {low == n ? n + 1 : gamma, tail, residual_prefix, std::nullopt};
    }
    SegmentSpec residual{SegmentKind::quotient, false, m.divided_by(residual_prefix),
                         VariableWindow{low, n}};
    return {gamma, tail, residual_prefix, residual};
}

Decomposition decompose(const SegmentSpec& seg) {
    require_exclusive(seg);
    const auto n = seg.num_vars();
    const auto lo = seg.window.lo;
    const auto local = restrict_to_window(seg.m, seg.window);
    const auto k = local.num_vars();
    const auto delta = local.degree();

    Decomposition d{seg.kind, n, {}};
    if (seg.kind == SegmentKind::ideal) {
        // summand i: (m x_i / ct_i(m)) M_{[i,k]}^{deg ct_i(m) - 1}
        for (std::size_t i = 1; i < k; ++i) {
            auto tail = coarse_tail(local, i);
            auto prefix = local.times_variable(i).divided_by(tail);
            d.summands.push_back({lift_from_window(prefix, lo, n),
                                  VariableWindow{global_index(lo, i), n},
                                  static_cast<std::int64_t>(tail.degree()) - 1});
        }
    } else {
        // summand i: (m / ft_{i-1}(m)) M_{[min ft_{i-1}(m) + 1, k]}^{delta-i+1}
        for (std::uint64_t i = 1; i <= delta; ++i) {
            auto tail = fine_tail(local, i - 1);
            auto prefix = local.divided_by(tail);
            d.summands.push_back({lift_from_window(prefix, lo, n),
                                  VariableWindow{global_index(lo, min_index(tail) + 1), n},
                                  static_cast<std::int64_t>(delta - i + 1)});
        }
    }
    return d;
}

BigCount segment_dimension(const SegmentSpec& seg) {
    seg.validate();
    auto exclusive = seg;
    exclusive.inclusive = false;
    BigCount dim = decompose(exclusive).dimension();
    if (seg.inclusive) dim += 1;
    return dim;
}

SegmentSpec multiply_segment(const SegmentSpec& seg) {
    seg.validate();
    if (!seg.full_window()) {
        throw error(errc::invalid_input, "multiplication by S_1 needs a segment over all variables");
    }
    const auto n = seg.num_vars();
    // ideal: I(m) -> I(m x_max), Ibar(m) -> Ibar(m x_n)
    // quotient: Q(m) -> Q(m x_n), Qbar(m) -> Qbar(m x_max)
    const bool use_max = (seg.kind == SegmentKind::ideal) != seg.inclusive;
    auto next = seg;
    next.m = seg.m.times_variable(use_max ? max_index(seg.m) : n);
    return next;
}

Decomposition multiply_decomposition(const Decomposition& d) {
    auto next = d;
    for (auto& s : next.summands) {
        if (d.kind == SegmentKind::ideal && s.degree < 0) continue;
        s.degree += 1;
    }
    return next;
}

SegmentSpec reduce_window(const SegmentSpec& seg) {
    seg.validate();
    if (seg.kind != SegmentKind::quotient) {
        throw error(errc::invalid_input, "only quotient segments can drop window variables");
    }
    auto reduced = seg;
    reduced.window.lo = min_index(seg.m);
    return reduced;
}

}  // namespace lexdual
