#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace orbitkit::life {

// A lattice point of Z^2; y grows downward, matching RLE row order.
struct Cell {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BoundingBox {
    std::int64_t min_x = 0, min_y = 0, max_x = -1, max_y = -1;

    std::int64_t width() const { return max_x - min_x + 1; }
    std::int64_t height() const { return max_y - min_y + 1; }
};

// A Game of Life configuration on Z^2: the finite set of live cells.
class LifeConfig {
public:
    LifeConfig() = default;
    LifeConfig(std::initializer_list<Cell> cells) : live_(cells) {}
    explicit LifeConfig(std::set<Cell> cells) : live_(std::move(cells)) {}

    const std::set<Cell>& cells() const { return live_; }
    bool alive(Cell c) const { return live_.count(c) != 0; }
    std::size_t population() const { return live_.size(); }
    bool empty() const { return live_.empty(); }

    void insert(Cell c) { live_.insert(c); }
    void erase(Cell c) { live_.erase(c); }

    // Empty box (width 0) for the empty configuration.
    BoundingBox bounding_box() const;
    LifeConfig translated(std::int64_t dx, std::int64_t dy) const;

    std::size_t hash() const;

    friend bool operator==(const LifeConfig&, const LifeConfig&) = default;

private:
    std::set<Cell> live_;
};

int neighbor_count(const LifeConfig& c, Cell cell);

// One generation under B3/S23.
LifeConfig step(const LifeConfig& c);
LifeConfig run(LifeConfig c, std::uint64_t n);

// RLE: `#` comment lines, a `x = W, y = H[, rule = ...]` header, then runs of
// `b`/`o`/`$` ending in `!`. A `#CXRLE Pos=x,y` line places the top-left
// corner; without one the pattern starts at the origin. Throws
// orbitkit::ParseError.
LifeConfig parse_rle(std::string_view text);
// Writes a `#CXRLE Pos=` line when the bounding box does not start at the
// origin, so parse_rle(emit_rle(c)) == c.
std::string emit_rle(const LifeConfig& c);

// `#`/`.` grid over the bounding box, preceded by an origin line.
std::string render_grid(const LifeConfig& c);

}  // namespace orbitkit::life

template <>
struct std::hash<orbitkit::life::LifeConfig> {
    std::size_t operator()(const orbitkit::life::LifeConfig& c) const noexcept { return c.hash(); }
};
