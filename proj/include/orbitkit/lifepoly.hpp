#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "orbitkit/dynamics.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/life.hpp"
#include "orbitkit/polymap.hpp"
#include "orbitkit/sparse_point.hpp"

// The Game of Life as a polynomial map on Z^N: pattern-indicator
// polynomials, the summed local rule, the Cantor flattening of the
// quadrant N^2 onto N, and the resulting global map.
namespace orbitkit::lifepoly {

class OutOfQuadrant : public Error {
public:
    using Error::Error;
};

class NotAConfiguration : public Error {
public:
    using Error::Error;
};

// A 3x3 neighborhood state, ordered as kNeighborhood (center first).
using Pattern9 = std::array<std::uint8_t, 9>;

// Pattern whose bit i (least significant first) is variable i.
Pattern9 pattern_from_bits(unsigned bits);
unsigned pattern_bits(const Pattern9& p);

// Next state of the center cell under B3/S23.
bool next_state(const Pattern9& p);

// Product of x_i for live entries and (1 - x_i) for dead ones.
poly::Product pattern_product(const Pattern9& p);
poly::Polynomial pattern_term(const Pattern9& p);

struct LocalRule {
    poly::SumOfProducts factored;  // one product per live-producing pattern
    poly::Polynomial expanded;
};

// Built once; the two forms are checked to agree on all {0,1}^9 inputs.
const LocalRule& local_rule();
poly::Polynomial build_local_rule();

// Cantor pairing (a+b)(a+b+1)/2 + b. Throws orbitkit::Error on overflow.
Index pair(Index a, Index b);
std::pair<Index, Index> unpair(Index n);
const PairingSpec& cantor_pairing();

SparsePoint encode(const life::LifeConfig& c);
life::LifeConfig decode(const SparsePoint& x);

// The global map: rule = build_local_rule(), pairing = Cantor.
GridRuleMap build_gol_map();

// Live cells of c lie at coordinates >= 1 and every live cell of step(c) at
// coordinates >= 0; under this the quadrant map and the Z^2 engine agree.
bool quadrant_safe(const life::LifeConfig& c);

}  // namespace orbitkit::lifepoly
