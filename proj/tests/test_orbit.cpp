#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitkit/lifepoly.hpp"
#include "orbitkit/orbit.hpp"

using namespace orbitkit;
using namespace orbitkit::orbit;
using poly::Polynomial;

namespace {

Polynomial x(poly::VarIndex i) { return Polynomial::var(i); }

const life::LifeConfig kBlock{{5, 5}, {6, 5}, {5, 6}, {6, 6}};
const life::LifeConfig kBlinker{{4, 5}, {5, 5}, {6, 5}};
const life::LifeConfig kToad{{5, 4}, {6, 4}, {7, 4}, {4, 5}, {5, 5}, {6, 5}};
const life::LifeConfig kGlider{{5, 4}, {6, 5}, {4, 6}, {5, 6}, {6, 6}};

// Recurrence check run on Life states directly.
cycles::CycleVerdict life_recurrence(const life::LifeConfig& c, std::uint64_t budget) {
    auto step = [](const life::LifeConfig& s) -> std::optional<life::LifeConfig> { return life::step(s); };
    return cycles::detect_hashset<life::LifeConfig>(step, c, budget);
}

}  // namespace

TEST_SUITE("orbit") {

TEST_CASE("singleton examples") {
    const PolyMapDesc id = FiniteComponentMap{};
    CHECK(is_stable_singleton(id, SparsePoint{{3, 9}}, 10) == StabilityVerdict{Stable{1, cycles::Periodic{0, 1}}});

    const PolyMapDesc phi = lifepoly::build_gol_map();
    CHECK(is_stable_singleton(phi, lifepoly::encode(kBlinker), 100) ==
          StabilityVerdict{Stable{2, cycles::Periodic{0, 2}}});

    const PolyMapDesc inc = FiniteComponentMap{{{0, x(0) + 1}}};
    CHECK(is_stable_singleton(inc, SparsePoint{}, 10000) == StabilityVerdict{Unknown{10001, Limit::MaxSteps}});
    CHECK(is_stable_singleton(inc, SparsePoint{}, 10000, cycles::Algorithm::Brent) ==
          StabilityVerdict{Unknown{10001, Limit::MaxSteps}});
    CHECK_THROWS_AS(is_stable_singleton(inc, SparsePoint{}, 0), Error);
}

TEST_CASE("closure examples") {
    const PolyMapDesc id = FiniteComponentMap{};
    CHECK(orbit_closure(GeneratorSet({id}), SparsePoint{{1, 1}}, 100, 100) == StabilityVerdict{Stable{1, std::nullopt}});

    const PolyMapDesc phi = lifepoly::build_gol_map();
    CHECK(orbit_closure(GeneratorSet({phi}), lifepoly::encode(kBlock), 100, 100) ==
          StabilityVerdict{Stable{1, std::nullopt}});

    const PolyMapDesc neg = FiniteComponentMap{{{0, -x(0)}}};
    const auto c = explore_orbit(GeneratorSet({neg, id}), SparsePoint{{0, 5}}, 100, 100);
    CHECK(c.verdict == StabilityVerdict{Stable{2, std::nullopt}});
    CHECK(c.visited == std::vector<SparsePoint>{SparsePoint{{0, 5}}, SparsePoint{{0, -5}}});

    CHECK_THROWS_AS(GeneratorSet({}), Error);
}

TEST_CASE("closure limits") {
    const PolyMapDesc inc = FiniteComponentMap{{{0, x(0) + 1}}};
    const PolyMapDesc dbl = FiniteComponentMap{{{0, 2 * x(0)}}};
    CHECK(orbit_closure(GeneratorSet({inc}), SparsePoint{}, 50, 1000) == StabilityVerdict{Unknown{50, Limit::MaxPoints}});
    CHECK(orbit_closure(GeneratorSet({inc}), SparsePoint{}, 1000, 50) == StabilityVerdict{Unknown{51, Limit::MaxDepth}});
    // the orbit of 1 under n+1 and 2n is infinite
    const auto v = orbit_closure(GeneratorSet({inc, dbl}), SparsePoint{{0, 1}}, 30, 1000);
    CHECK(v == StabilityVerdict{Unknown{30, Limit::MaxPoints}});
}

TEST_CASE("orbit contains x and stable closures are closed") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<int> start(-3, 3);
    int stable = 0;
    for (int k = 0; k < 100; ++k) {
        std::vector<PolyMapDesc> maps;
        const int n = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < n; ++g) {
            FiniteComponentMap m;
            for (Index i = 0; i < 2; ++i)
                if (rng() % 2) m.components[i] = oracles::random_polynomial(rng, 2, 2, 2, 3);
            maps.push_back(m);
        }
        SparsePoint p;
        p.set(0, start(rng));
        p.set(1, start(rng));
        const GeneratorSet s(maps);
        const auto c = explore_orbit(s, p, 200, 12);
        REQUIRE(!c.visited.empty());
        CHECK(c.visited.front() == p);
        if (const auto* st = std::get_if<Stable>(&c.verdict)) {
            ++stable;
            CHECK(st->orbit_size == c.visited.size());
            CHECK(closed_under(s, c.visited));
        }
    }
    CHECK(stable > 0);
}

TEST_CASE("singleton closure agrees with cycle detection") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> start(-3, 3);
    // squaring maps double the bit length every step, so horizons stay short
    const std::uint64_t budget = 16;
    for (int k = 0; k < 200; ++k) {
        FiniteComponentMap m;
        for (Index i = 0; i < 2; ++i)
            if (rng() % 2) m.components[i] = oracles::random_polynomial(rng, 2, 2, 2, 3);
        SparsePoint p;
        p.set(0, start(rng));
        p.set(1, start(rng));
        const auto single = is_stable_singleton(m, p, budget);
        const auto closure = orbit_closure(GeneratorSet({m}), p, budget + 1, budget);
        REQUIRE(single.index() == closure.index());
        if (const auto* s = std::get_if<Stable>(&single)) CHECK(s->orbit_size == std::get<Stable>(closure).orbit_size);
    }
}

TEST_CASE("stable verdicts persist at larger budgets") {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 100; ++k) {
        FiniteComponentMap m;
        for (Index i = 0; i < 2; ++i)
            if (rng() % 2) m.components[i] = oracles::random_polynomial(rng, 2, 2, 2, 3);
        const SparsePoint p{{0, static_cast<int>(rng() % 7) - 3}, {1, static_cast<int>(rng() % 7) - 3}};
        const auto small = is_stable_singleton(m, p, 20);
        if (!std::holds_alternative<Stable>(small)) continue;
        for (std::uint64_t b : {21, 50, 500}) {
            CHECK(is_stable_singleton(m, p, b) == small);
            CHECK(is_stable_singleton(m, p, b, cycles::Algorithm::Brent) == small);
        }
        const auto closure = orbit_closure(GeneratorSet({m}), p, 100, 100);
        CHECK(orbit_closure(GeneratorSet({m}), p, 1000, 1000) == closure);
    }
}

TEST_CASE("life reduction agrees with recurrence on life states") {
    const PolyMapDesc phi = lifepoly::build_gol_map();
    struct Case {
        life::LifeConfig c;
        std::uint64_t size, lam, mu;
    };
    for (const auto& [c, size, lam, mu] : {Case{kBlock, 1, 0, 1}, Case{kBlinker, 2, 0, 2}, Case{kToad, 2, 0, 2}}) {
        const auto v = is_stable_singleton(phi, lifepoly::encode(c), 1000);
        CHECK(v == StabilityVerdict{Stable{size, cycles::Periodic{lam, mu}}});
        CHECK(life_recurrence(c, 1000) == cycles::CycleVerdict{cycles::Periodic{lam, mu}});
        CHECK(orbit_closure(GeneratorSet({phi}), lifepoly::encode(c), 1001, 1000) == StabilityVerdict{Stable{size, std::nullopt}});
    }
    // the glider travels away from the edges, so both trajectories agree step by step
    auto p = lifepoly::encode(kGlider.translated(20, 20));
    auto g = kGlider.translated(20, 20);
    for (int k = 0; k < 60; ++k) {
        REQUIRE(lifepoly::quadrant_safe(g));
        p = orbitkit::apply(phi, p);
        g = life::step(g);
        REQUIRE(lifepoly::decode(p) == g);
    }
    const auto gv = is_stable_singleton(phi, lifepoly::encode(kGlider.translated(20, 20)), 1000);
    CHECK(gv == StabilityVerdict{Unknown{1001, Limit::MaxSteps}});
    CHECK(life_recurrence(kGlider.translated(20, 20), 1000) == cycles::CycleVerdict{cycles::Exhausted{1000}});
}

TEST_CASE("report lines") {
    CHECK(report_line(Stable{2, cycles::Periodic{0, 2}}) == "verdict=stable orbit_size=2 preperiod=0 period=2");
    CHECK(report_line(Stable{3, std::nullopt}) == "verdict=stable orbit_size=3");
    CHECK(report_line(Unknown{100000, Limit::MaxPoints}) == "verdict=unknown points=100000 limit=max_points");
}

}  // TEST_SUITE
