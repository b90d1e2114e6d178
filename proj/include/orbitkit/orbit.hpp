#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitkit/cycles.hpp"
#include "orbitkit/dynamics.hpp"
#include "orbitkit/sparse_point.hpp"

// Finiteness of orbits under a finite set S of polynomial maps. The orbit of
// x is {f(x) : f in the monoid generated by S}, identity included. Orbit
// finiteness is undecidable in general, so every search here is budgeted and
// "unknown" is an ordinary answer.
namespace orbitkit::orbit {

enum class Limit { MaxSteps, MaxPoints, MaxDepth };

struct Stable {
    std::uint64_t orbit_size;
    // (λ, μ) of the trajectory, for single-map checks.
    std::optional<cycles::Periodic> witness;
    friend bool operator==(const Stable&, const Stable&) = default;
};

struct Unknown {
    std::uint64_t points_explored;
    Limit limit;
    friend bool operator==(const Unknown&, const Unknown&) = default;
};

using StabilityVerdict = std::variant<Stable, Unknown>;

// `verdict=stable orbit_size=2 preperiod=0 period=2`,
// `verdict=unknown points=100000 limit=max_points`.
std::string report_line(const StabilityVerdict& v);
std::string limit_name(Limit l);

// Nonempty list of generators.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<PolyMapDesc> maps);

    const std::vector<PolyMapDesc>& maps() const { return maps_; }

private:
    std::vector<PolyMapDesc> maps_;
};

// Cycle detection on n -> f(n) from x. Unknown reports points = budget+1
// (x_0 .. x_budget) and limit max_steps.
StabilityVerdict is_stable_singleton(const PolyMapDesc& f, const SparsePoint& x, std::uint64_t budget,
                                     cycles::Algorithm algo = cycles::Algorithm::HashSet);

struct Closure {
    StabilityVerdict verdict;
    // Breadth-first order, x first.
    std::vector<SparsePoint> visited;
};

// Breadth-first closure. max_depth bounds the number of expansion rounds;
// max_points bounds |visited|.
Closure explore_orbit(const GeneratorSet& s, const SparsePoint& x, std::uint64_t max_points, std::uint64_t max_depth);

StabilityVerdict orbit_closure(const GeneratorSet& s, const SparsePoint& x, std::uint64_t max_points,
                               std::uint64_t max_depth);

// True when every generator maps every point of `points` back into it.
bool closed_under(const GeneratorSet& s, const std::vector<SparsePoint>& points);

}  // namespace orbitkit::orbit
