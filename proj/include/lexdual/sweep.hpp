#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lexdual/macaulay.hpp"

// Exhaustive verification of every formula against the brute-force oracle,
// one (n, delta) cell at a time. Cells are independent, so the sweep has a
// serial reference driver and an OpenMP driver that must agree line for line.
namespace lexdual::sweep {

struct Config {
    std::size_t max_n = 5;
    std::size_t max_delta = 6;
    std::uint64_t seed = 20240601;
    // Random monomial ideals drawn per cell for the growth-bound check.
    std::size_t samples_per_cell = 40;
    // Adds the (6,8) and (4,4) cells used by the worked examples.
    bool spot_cases = true;
    // Macaulay uniqueness search range; max_p = 0 skips it.
    Coefficient uniqueness_max_s = 5000;
    std::size_t uniqueness_max_p = 8;
};

struct Check {
    // n = 0 marks a check that does not belong to a grid cell.
    std::size_t n = 0;
    std::size_t delta = 0;
    std::string property;
    bool ok = true;
    std::size_t checked = 0;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::size_t random_samples = 0;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

std::vector<std::pair<std::size_t, std::size_t>> cells(const Config& config);

// Per-cell RNG seed, independent of the order cells are visited in.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, std::size_t delta);

std::vector<Check> verify_cell(std::size_t n, std::size_t delta, const Config& config);

// For every s <= max_s and p <= max_p, counts strictly decreasing sequences
// with sum binom(s_i, i) = s by exhaustive search and compares with macaulay_rep.
std::vector<Check> verify_macaulay_uniqueness(Coefficient max_s, std::size_t max_p);

Report run_serial(const Config& config);
Report run_parallel(const Config& config);

// `cell=(n,delta) property=<name> status=ok|FAIL detail=...`
std::string format_line(const Check& check);

}  // namespace lexdual::sweep
