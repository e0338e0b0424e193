#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lexdual/macaulay.hpp"
#include "lexdual/monomial.hpp"
#include "lexdual/segments.hpp"

// Brute-force ground truth. Nothing in here uses the closed-form formulas;
// sets are materialized and compared with lex_compare only.
namespace lexdual::oracle {

inline constexpr std::uint64_t default_cap = 10'000'000;

struct EnumeratedSpace {
    std::size_t n = 0;
    std::size_t delta = 0;
    // Strictly lex-descending, so index + 1 is the rank.
    std::vector<Monomial> monomials;
};

EnumeratedSpace enumerate_space(std::size_t n, std::size_t delta, std::uint64_t cap = default_cap);

std::vector<Monomial> enumerate_segment(const SegmentSpec& seg, std::uint64_t cap = default_cap);

// Every monomial of `s` materialized: prefix * (each monomial of the window).
std::vector<Monomial> materialize(const Summand& s, std::size_t n, std::uint64_t cap = default_cap);

// {g * x_i}, deduplicated, lex-descending.
std::vector<Monomial> span_multiply(std::span<const Monomial> generators);

// Lex-descending sort and dedup in place.
void normalize(std::vector<Monomial>& ms);

// Monomials of `space` not in `subset`; both lex-descending.
std::vector<Monomial> complement(std::span<const Monomial> space, std::span<const Monomial> subset);

struct MonomialIdealSample {
    std::size_t n = 0;
    std::size_t delta = 0;
    std::vector<Monomial> generators;
};

// A random set of distinct degree-delta generators; `count` is clamped to the
// size of the graded piece.
MonomialIdealSample random_ideal_sample(std::size_t n, std::size_t delta, std::size_t count,
                                        std::mt19937_64& rng);

struct HilbertNext {
    BigCount ideal_dim;
    BigCount quotient_dim;
};

// dim I_{delta+1} and dim (S/I)_{delta+1} for the ideal generated by the sample.
HilbertNext hilbert_next(const MonomialIdealSample& sample, std::uint64_t cap = default_cap);

}  // namespace lexdual::oracle
