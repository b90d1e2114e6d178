#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "orbitkit/dynamics.hpp"
#include "orbitkit/life.hpp"

namespace orbitkit::cli {

// Exit statuses: a verdict was produced (Unknown included), the input was
// rejected, or an internal invariant failed.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInternalError = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; `-` as a file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// size x size soup at (offset_x, offset_y) with each cell live with the
// given probability. Depends only on the generator state.
life::LifeConfig random_soup(std::mt19937_64& rng, int size, double density, std::int64_t offset_x,
                             std::int64_t offset_y);

struct VerifySummary {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    // First failing trial, for the report.
    std::string first_failure;
};

// For seeded quadrant-safe soups c, checks decode(apply(map, encode(c))) == step(c).
VerifySummary verify_commuting_square(const GridRuleMap& map, std::uint64_t trials, int size, double density,
                                      std::uint64_t seed);

}  // namespace orbitkit::cli
