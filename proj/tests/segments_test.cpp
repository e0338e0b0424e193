#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lexdual/error.hpp"
#include "lexdual/oracle.hpp"
#include "lexdual/segments.hpp"

using namespace lexdual;

namespace {

const Monomial m1{2, 1, 0, 3, 0, 2};  // a^2*b*d^3*f^2

struct Expected {
    Monomial prefix;
    std::size_t lo;
    std::size_t hi;
    std::int64_t degree;
};

void check_summands(const Decomposition& d, const std::vector<Expected>& want) {
    REQUIRE(d.summands.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(d.summands[i].prefix == want[i].prefix);
        CHECK(d.summands[i].window == VariableWindow{want[i].lo, want[i].hi});
        CHECK(d.summands[i].degree == want[i].degree);
    }
}

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::internal;
}

}  // namespace

TEST_CASE("segment dimensions of a^2 b d^3 f^2") {
    CHECK(segment_dimension(SegmentSpec::ideal(m1)) == 362);
    CHECK(segment_dimension(SegmentSpec::quotient(m1)) == 924);
    CHECK(segment_dimension(SegmentSpec::ideal(m1, true)) == 363);
    CHECK(segment_dimension(SegmentSpec::quotient(m1, true)) == 925);
    CHECK(segment_dimension(SegmentSpec::ideal(m1)) + segment_dimension(SegmentSpec::quotient(m1)) + 1 ==
          space_dimension(6, 8));
}

TEST_CASE("extreme monomials have empty segments") {
    CHECK(segment_dimension(SegmentSpec::ideal(Monomial{4, 0, 0})) == 0);
    CHECK(segment_dimension(SegmentSpec::quotient(Monomial{0, 0, 4})) == 0);
    for (const auto& s : decompose(SegmentSpec::ideal(Monomial{4, 0, 0})).summands) CHECK(s.trivial());
}

TEST_CASE("ideal decomposition of a^2 b d^3 f^2") {
    auto d = decompose(SegmentSpec::ideal(m1));
    check_summands(d, {
                          {Monomial{3, 0, 0, 0, 0, 0}, 1, 6, 5},
                          {Monomial{2, 2, 0, 0, 0, 0}, 2, 6, 4},
                          {Monomial{2, 1, 1, 0, 0, 0}, 3, 6, 4},
                          {Monomial{2, 1, 0, 4, 0, 0}, 4, 6, 1},
                          {Monomial{2, 1, 0, 3, 1, 0}, 5, 6, 1},
                      });
    std::vector<BigCount> dims;
    for (const auto& s : d.summands) dims.push_back(s.dimension());
    CHECK(dims == std::vector<BigCount>{252, 70, 35, 3, 2});
}

TEST_CASE("quotient decomposition of a^2 b d^3 f^2") {
    auto d = decompose(SegmentSpec::quotient(m1));
    check_summands(d, {
                          {Monomial{0, 0, 0, 0, 0, 0}, 2, 6, 8},
                          {Monomial{1, 0, 0, 0, 0, 0}, 2, 6, 7},
                          {Monomial{2, 0, 0, 0, 0, 0}, 3, 6, 6},
                          {Monomial{2, 1, 0, 0, 0, 0}, 5, 6, 5},
                          {Monomial{2, 1, 0, 1, 0, 0}, 5, 6, 4},
                          {Monomial{2, 1, 0, 2, 0, 0}, 5, 6, 3},
                          {Monomial{2, 1, 0, 3, 0, 0}, 7, 6, 2},
                          {Monomial{2, 1, 0, 3, 0, 1}, 7, 6, 1},
                      });
    std::vector<BigCount> dims;
    for (const auto& s : d.summands) dims.push_back(s.dimension());
    CHECK(dims == std::vector<BigCount>{495, 330, 84, 6, 5, 4, 0, 0});
}

TEST_CASE("one-step splits") {
    auto ideal = split_once(SegmentSpec::ideal(m1));
    CHECK(ideal.pivot == 3);
    CHECK(ideal.space == Summand{Monomial{3, 0, 0, 0, 0, 0}, {1, 6}, 5});
    CHECK(ideal.residual_prefix == Monomial{2, 0, 0, 0, 0, 0});
    REQUIRE(ideal.residual);
    CHECK(ideal.residual->window == VariableWindow{2, 6});
    CHECK(ideal.residual->m == Monomial{0, 1, 0, 3, 0, 2});
    CHECK(ideal.residual->degree() == 6);

    auto quotient = split_once(SegmentSpec::quotient(m1));
    CHECK(quotient.pivot == 2);
    CHECK(quotient.space == Summand{Monomial::unit(6), {2, 6}, 8});
    CHECK(quotient.residual_prefix == Monomial{1, 0, 0, 0, 0, 0});
    REQUIRE(quotient.residual);
    CHECK(quotient.residual->window == VariableWindow{1, 6});
    CHECK(quotient.residual->m == Monomial{1, 1, 0, 3, 0, 2});

    auto degenerate = split_once(SegmentSpec::ideal(Monomial{5, 0, 0}));
    CHECK(degenerate.pivot == 6);
    CHECK(degenerate.space.trivial());
    CHECK_FALSE(degenerate.residual);

    auto last = split_once(SegmentSpec::quotient(Monomial{0, 0, 5}));
    CHECK(last.pivot == 4);
    CHECK(last.space.trivial());
    CHECK_FALSE(last.residual);
}

TEST_CASE("splitting an inclusive segment is unsupported") {
    CHECK(code_of([] { split_once(SegmentSpec::ideal(m1, true)); }) == errc::unsupported);
    CHECK(code_of([] { decompose(SegmentSpec::quotient(m1, true)); }) == errc::unsupported);
}

TEST_CASE("segments reject the unit and bad windows") {
    CHECK(code_of([] { SegmentSpec::ideal(Monomial::unit(3)); }) == errc::undefined_on_unit);
    SegmentSpec outside{SegmentKind::ideal, false, m1, VariableWindow{2, 6}};
    CHECK(code_of([&] { outside.validate(); }) == errc::invalid_input);
    SegmentSpec short_window{SegmentKind::ideal, false, m1, VariableWindow{1, 5}};
    CHECK(code_of([&] { short_window.validate(); }) == errc::invalid_input);
}

TEST_CASE("multiplying segments by S_1") {
    CHECK(multiply_segment(SegmentSpec::ideal(m1)).m == Monomial{2, 1, 0, 3, 0, 3});
    CHECK(multiply_segment(SegmentSpec::ideal(Monomial{1, 1, 0}, true)).m == Monomial{1, 1, 1});
    // oracle: complement of S_1 * Ibar(b^2) inside the cubics is Q(b^2 c)
    auto grown = multiply_segment(SegmentSpec::quotient(Monomial{0, 2, 0}));
    CHECK(grown.m == Monomial{0, 2, 1});
    CHECK(grown.kind == SegmentKind::quotient);
    CHECK(oracle::enumerate_segment(grown) == std::vector<Monomial>{Monomial{0, 1, 2}, Monomial{0, 0, 3}});

    SegmentSpec windowed{SegmentKind::ideal, false, Monomial{0, 1, 1}, VariableWindow{2, 3}};
    CHECK(code_of([&] { multiply_segment(windowed); }) == errc::invalid_input);
}

TEST_CASE("multiplying decompositions") {
    auto d = multiply_decomposition(decompose(SegmentSpec::ideal(m1)));
    std::vector<std::int64_t> degrees;
    for (const auto& s : d.summands) degrees.push_back(s.degree);
    CHECK(degrees == std::vector<std::int64_t>{6, 5, 5, 2, 2});
    CHECK(d.dimension() == segment_dimension(multiply_segment(SegmentSpec::ideal(m1))));

    auto trivial = multiply_decomposition(decompose(SegmentSpec::ideal(Monomial{4, 0, 0})));
    CHECK(trivial.dimension() == 0);

    auto q = multiply_decomposition(decompose(SegmentSpec::quotient(m1)));
    degrees.clear();
    for (const auto& s : q.summands) degrees.push_back(s.degree);
    CHECK(degrees == std::vector<std::int64_t>{9, 8, 7, 6, 5, 4, 3, 2});
    // brute force (S/S_1 L)_9 has 1348 monomials
    CHECK(q.dimension() == 1348);
    CHECK(q.dimension() == segment_dimension(multiply_segment(SegmentSpec::quotient(m1))));
}

TEST_CASE("reducing quotient windows") {
    SegmentSpec seg{SegmentKind::quotient, false, Monomial{0, 1, 0, 3, 0, 2}, VariableWindow{1, 6}};
    CHECK(reduce_window(seg).window == VariableWindow{2, 6});

    SegmentSpec tight{SegmentKind::quotient, false, Monomial{0, 1, 0, 3, 0, 2}, VariableWindow{2, 6}};
    CHECK(reduce_window(tight) == tight);

    SegmentSpec d3{SegmentKind::quotient, false, Monomial{0, 0, 0, 3}, VariableWindow{1, 4}};
    auto reduced = reduce_window(d3);
    CHECK(reduced.window == VariableWindow{4, 4});
    CHECK(oracle::enumerate_segment(d3).empty());
    CHECK(oracle::enumerate_segment(reduced).empty());

    CHECK(code_of([] { reduce_window(SegmentSpec::ideal(m1)); }) == errc::invalid_input);
}

TEST_CASE("windowed segment dimensions match enumeration") {
    SegmentSpec seg{SegmentKind::ideal, false, Monomial{0, 1, 0, 3, 0, 2}, VariableWindow{2, 6}};
    CHECK(segment_dimension(seg) == oracle::enumerate_segment(seg).size());
    seg.kind = SegmentKind::quotient;
    CHECK(segment_dimension(seg) == oracle::enumerate_segment(seg).size());
}
