#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "orbitkit/error.hpp"
#include "orbitkit/polymap.hpp"
#include "orbitkit/sparse_point.hpp"

namespace orbitkit {

// A point's support contains a coordinate the map cannot interpret.
class MalformedPoint : public Error {
public:
    using Error::Error;
};

// Bijection N^2 -> N used to flatten a quadrant grid into Z^N coordinates.
// forward throws orbitkit::Error when the result does not fit an Index.
struct PairingSpec {
    std::string name;
    Index (*forward)(Index a, Index b);
    std::pair<Index, Index> (*inverse)(Index n);
};

struct Offset {
    int dx;
    int dy;
};

// Local variable i of a grid rule reads the cell at kNeighborhood[i]
// relative to the center: center first, then the 8 neighbors row by row
// (NW, N, NE, W, E, SW, S, SE), with y growing downward.
inline constexpr std::array<Offset, 9> kNeighborhood{{
    {0, 0},
    {-1, -1}, {0, -1}, {1, -1},
    {-1, 0},           {1, 0},
    {-1, 1},  {0, 1},  {1, 1},
}};

// Coordinates absent from `components` are left unchanged.
struct FiniteComponentMap {
    std::map<Index, poly::Polynomial> components;

    friend bool operator==(const FiniteComponentMap&, const FiniteComponentMap&) = default;
};

// outer ∘ inner, computed symbolically.
FiniteComponentMap compose(const FiniteComponentMap& outer, const FiniteComponentMap& inner);

// One line per component, `<index>: <polynomial>`; `#` starts a comment.
FiniteComponentMap parse_component_map(std::string_view text);
std::string format_component_map(const FiniteComponentMap& m);

// A shift-invariant rule over the 3x3 neighborhood, lifted to Z^N through a
// pairing. The rule must vanish on the all-zero neighborhood so that images
// of finitely supported points stay finitely supported.
class GridRuleMap {
public:
    GridRuleMap(poly::Polynomial rule, PairingSpec pairing);

    const poly::Polynomial& rule() const { return rule_; }
    const PairingSpec& pairing() const { return pairing_; }

    // Rule value on one neighborhood (ordered as kNeighborhood).
    BigInt evaluate_local(std::span<const BigInt, 9> values) const;

private:
    poly::Polynomial rule_;
    PairingSpec pairing_;
    // Rule values on the 512 {0,1} neighborhoods, bit i = variable i.
    std::shared_ptr<const std::array<BigInt, 512>> boolean_table_;
};

using PolyMapDesc = std::variant<FiniteComponentMap, GridRuleMap>;

SparsePoint apply(const FiniteComponentMap& m, const SparsePoint& x);
SparsePoint apply(const GridRuleMap& m, const SparsePoint& x);
SparsePoint apply(const PolyMapDesc& m, const SparsePoint& x);

SparsePoint iterate(const PolyMapDesc& m, SparsePoint x, std::uint64_t n);

}  // namespace orbitkit
