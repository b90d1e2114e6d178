#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitkit/cli.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/life.hpp"

using namespace orbitkit;
using namespace orbitkit::life;

namespace {

const LifeConfig kBlinker{{0, 0}, {1, 0}, {2, 0}};
const LifeConfig kBlock{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
// bob$2bo$3o!
const LifeConfig kGlider{{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};

}  // namespace

TEST_SUITE("life") {

TEST_CASE("neighbor_count") {
    CHECK(neighbor_count(LifeConfig{}, {5, -5}) == 0);
    CHECK(neighbor_count(kBlinker, {1, 0}) == 2);
    CHECK(neighbor_count(kBlinker, {1, 1}) == 3);
    CHECK(neighbor_count(kBlinker, {1, -1}) == 3);
    CHECK(neighbor_count(kBlinker, {-1, 0}) == 1);
    CHECK(neighbor_count(kBlock, {0, 0}) == 3);
}

TEST_CASE("step") {
    CHECK(step(LifeConfig{}).empty());
    CHECK(step(kBlinker) == LifeConfig{{1, -1}, {1, 0}, {1, 1}});
    CHECK(step(kBlock) == kBlock);
    CHECK(step(LifeConfig{{0, 0}}).empty());
}

TEST_CASE("run") {
    CHECK(run(kGlider, 0) == kGlider);
    CHECK(run(kBlinker, 2) == kBlinker);
    CHECK(run(kGlider, 4) == kGlider.translated(1, 1));
    CHECK(run(kGlider, 8) == kGlider.translated(2, 2));
}

TEST_CASE("step commutes with translation") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) {
        const auto c = cli::random_soup(rng, 8, 0.4, 0, 0);
        const auto dx = static_cast<std::int64_t>(rng() % 200) - 100;
        const auto dy = static_cast<std::int64_t>(rng() % 200) - 100;
        CHECK(step(c.translated(dx, dy)) == step(c).translated(dx, dy));
    }
}

TEST_CASE("step output stays in the 1-dilation") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        const auto c = cli::random_soup(rng, 10, 0.35, -5, -5);
        const auto next = step(c);
        for (const auto& cell : next.cells()) {
            bool near = false;
            for (const auto& live : c.cells())
                if (std::abs(live.x - cell.x) <= 1 && std::abs(live.y - cell.y) <= 1) near = true;
            CHECK(near);
        }
    }
}

TEST_CASE("still lifes are fixed points") {
    const LifeConfig beehive{{1, 0}, {2, 0}, {0, 1}, {3, 1}, {1, 2}, {2, 2}};
    const LifeConfig boat{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}};
    for (const auto& c : {kBlock, beehive, boat}) {
        for (const auto& cell : c.cells()) {
            const int n = neighbor_count(c, cell);
            CHECK((n == 2 || n == 3));
        }
        CHECK(step(c) == c);
    }
}

TEST_CASE("agrees with a dense reference on random soups") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 1000; ++k) {
        const double density = 0.1 + 0.4 * static_cast<double>(k % 41) / 40.0;
        const auto c = cli::random_soup(rng, 16, density, -8, 3);
        REQUIRE(step(c) == oracles::dense_step(c));
    }
}

TEST_CASE("parse_rle") {
    CHECK(parse_rle("x = 3, y = 1\n3o!") == kBlinker);
    CHECK(parse_rle("x = 3, y = 3\nbob$2bo$3o!") == kGlider);
    CHECK(parse_rle("#N Glider\n#C comment\nx = 3, y = 3, rule = B3/S23\nbo\nb$2bo$3o!\n") == kGlider);
    CHECK(parse_rle("x = 0, y = 0\n!").empty());
    CHECK(parse_rle("x = 3, y = 3\no2$2bo!") == LifeConfig{{0, 0}, {2, 2}});
    CHECK(parse_rle("#CXRLE Pos=4,-2\nx = 3, y = 1\n3o!") == kBlinker.translated(4, -2));
    CHECK(parse_rle("x = 2, y = 2\n2o$2o!\ntrailing text is ignored") == kBlock);
}

TEST_CASE("parse_rle errors") {
    CHECK_THROWS_AS(parse_rle("3o!"), ParseError);
    CHECK_THROWS_AS(parse_rle("x = 3\n3o!"), ParseError);
    CHECK_THROWS_AS(parse_rle("x = a, y = 1\n3o!"), ParseError);
    CHECK_THROWS_AS(parse_rle("x = 3, y = 1\n3o"), ParseError);
    try {
        parse_rle("x = 3, y = 1\nbo$\n2oz!");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("emit_rle") {
    CHECK(emit_rle(LifeConfig{}) == "x = 0, y = 0\n!");
    CHECK(emit_rle(kBlinker) == "x = 3, y = 1\n3o!");
    // trailing dead cells of a row are omitted
    CHECK(emit_rle(kGlider) == "x = 3, y = 3\nbo$2bo$3o!");
    CHECK(emit_rle(LifeConfig{{0, 0}, {2, 3}}) == "x = 3, y = 4\no3$2bo!");
    CHECK(emit_rle(kBlinker.translated(5, 6)) == "#CXRLE Pos=5,6\nx = 3, y = 1\n3o!");
}

TEST_CASE("rle round trip") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 200; ++k) {
        const auto c = cli::random_soup(rng, 1 + static_cast<int>(rng() % 30), 0.3,
                                        static_cast<std::int64_t>(rng() % 50) - 25, static_cast<std::int64_t>(rng() % 50) - 25);
        CHECK(parse_rle(emit_rle(c)) == c);
        // without the position line the pattern lands at its bounding-box origin
        const auto box = c.bounding_box();
        std::string text = emit_rle(c);
        if (text.rfind("#CXRLE", 0) == 0) text = text.substr(text.find('\n') + 1);
        CHECK(parse_rle(text) == (c.empty() ? c : c.translated(-box.min_x, -box.min_y)));
    }
    // long rows wrap at 70 columns
    LifeConfig wide;
    for (int i = 0; i < 200; i += 2) wide.insert({i, 0});
    const auto text = emit_rle(wide);
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        CHECK(end - start <= 70);
        start = end + 1;
    }
    CHECK(parse_rle(text) == wide);
}

TEST_CASE("render_grid") {
    CHECK(render_grid(kGlider.translated(2, 3)) == "origin=(2,3) width=3 height=3\n.#.\n..#\n###\n");
}

}  // TEST_SUITE
