#include "orbitkit/life.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "hash_util.hpp"
#include "orbitkit/error.hpp"

namespace orbitkit::life {

namespace {

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        std::size_t seed = std::hash<std::int64_t>{}(c.x);
        detail::hash_combine(seed, std::hash<std::int64_t>{}(c.y));
        return seed;
    }
};

}  // namespace

BoundingBox LifeConfig::bounding_box() const {
    if (live_.empty()) return {};
    BoundingBox box{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max(),
                    std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
    for (const auto& c : live_) {
        box.min_x = std::min(box.min_x, c.x);
        box.min_y = std::min(box.min_y, c.y);
        box.max_x = std::max(box.max_x, c.x);
        box.max_y = std::max(box.max_y, c.y);
    }
    return box;
}

LifeConfig LifeConfig::translated(std::int64_t dx, std::int64_t dy) const {
    std::set<Cell> out;
    for (const auto& c : live_) out.insert(out.end(), Cell{c.x + dx, c.y + dy});
    return LifeConfig(std::move(out));
}

std::size_t LifeConfig::hash() const {
    std::size_t seed = live_.size();
    for (const auto& c : live_) detail::hash_combine(seed, CellHash{}(c));
    return seed;
}

int neighbor_count(const LifeConfig& c, Cell cell) {
    int n = 0;
    for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            if ((dx != 0 || dy != 0) && c.alive({cell.x + dx, cell.y + dy})) ++n;
    return n;
}

LifeConfig step(const LifeConfig& c) {
    // Only live cells and their neighbors can be alive next generation.
    std::unordered_map<Cell, int, CellHash> counts;
    counts.reserve(c.population() * 9);
    for (const auto& cell : c.cells()) {
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dx = -1; dx <= 1; ++dx)
                if (dx != 0 || dy != 0) ++counts[{cell.x + dx, cell.y + dy}];
    }
    std::set<Cell> next;
    for (const auto& [cell, n] : counts)
        if (n == 3 || (n == 2 && c.alive(cell))) next.insert(cell);
    return LifeConfig(std::move(next));
}

LifeConfig run(LifeConfig c, std::uint64_t n) {
    for (std::uint64_t k = 0; k < n; ++k) c = step(c);
    return c;
}

// --- RLE --------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

void parse_header(std::string_view line, std::size_t line_no) {
    bool have_x = false, have_y = false;
    std::size_t start = 0;
    while (start <= line.size()) {
        const auto comma = std::min(line.find(',', start), line.size());
        const std::string_view field = line.substr(start, comma - start);
        const auto eq = field.find('=');
        const std::size_t col = start + 1;
        if (eq == std::string_view::npos) throw ParseError("malformed header field '" + trim(field) + "'", line_no, col);
        const std::string key = trim(field.substr(0, eq));
        const std::string value = trim(field.substr(eq + 1));
        if (key == "x" || key == "y") {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("header " + key + " must be a non-negative integer", line_no, col);
            (key == "x" ? have_x : have_y) = true;
        } else if (key != "rule") {
            throw ParseError("unknown header key '" + key + "'", line_no, col);
        }
        start = comma + 1;
    }
    if (!have_x || !have_y) throw ParseError("header must declare x and y", line_no, 1);
}

// Golly's extension line `#CXRLE Pos=x,y`: position of the pattern's
// top-left corner.
void parse_position(const std::string& line, std::size_t line_no, std::int64_t& ox, std::int64_t& oy) {
    const auto pos = line.find("Pos=");
    if (pos == std::string::npos) return;
    std::istringstream in(line.substr(pos + 4));
    char comma = 0;
    if (!(in >> ox >> comma >> oy) || comma != ',') throw ParseError("malformed Pos in #CXRLE line", line_no, pos + 1);
}

}  // namespace

LifeConfig parse_rle(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }

    std::size_t k = 0;
    std::int64_t origin_x = 0, origin_y = 0;
    for (; k < lines.size(); ++k) {
        const std::string t = trim(lines[k]);
        if (t.rfind("#CXRLE", 0) == 0) parse_position(t, k + 1, origin_x, origin_y);
        if (t.empty() || t[0] == '#') continue;
        break;
    }
    if (k == lines.size()) throw ParseError("missing header", lines.size(), 1);
    {
        const std::string_view h = lines[k];
        const auto first = h.find_first_not_of(" \t");
        if (h[first] != 'x') throw ParseError("malformed header: expected 'x = ...'", k + 1, first + 1);
        parse_header(h, k + 1);
    }

    LifeConfig c;
    std::int64_t x = origin_x, y = origin_y;
    std::uint64_t run_count = 0;
    bool have_count = false;
    for (++k; k < lines.size(); ++k) {
        const std::string_view line = lines[k];
        if (!line.empty() && line[0] == '#') continue;
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char ch = line[col];
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                run_count = run_count * 10 + static_cast<std::uint64_t>(ch - '0');
                if (run_count > (std::uint64_t{1} << 40)) throw ParseError("run count too large", k + 1, col + 1);
                have_count = true;
                continue;
            }
            const auto n = static_cast<std::int64_t>(have_count ? run_count : 1);
            switch (ch) {
                case 'b':
                case '.':
                    x += n;
                    break;
                case 'o':
                    for (std::int64_t i = 0; i < n; ++i) c.insert({x + i, y});
                    x += n;
                    break;
                case '$':
                    y += n;
                    x = origin_x;
                    break;
                case '!':
                    return c;
                default:
                    throw ParseError(std::string("unknown symbol '") + ch + "'", k + 1, col + 1);
            }
            run_count = 0;
            have_count = false;
        }
    }
    throw ParseError("missing terminator '!'", lines.size(), lines.empty() ? 1 : lines.back().size() + 1);
}

std::string emit_rle(const LifeConfig& c) {
    const auto box = c.bounding_box();
    std::ostringstream out;
    if (!c.empty() && (box.min_x != 0 || box.min_y != 0))
        out << "#CXRLE Pos=" << box.min_x << ',' << box.min_y << '\n';
    out << "x = " << (c.empty() ? 0 : box.width()) << ", y = " << (c.empty() ? 0 : box.height()) << '\n';

    std::vector<std::string> tokens;
    auto push_run = [&](std::int64_t n, char sym) {
        if (n <= 0) return;
        tokens.push_back(n == 1 ? std::string(1, sym) : std::to_string(n) + sym);
    };
    std::int64_t pending_rows = 0;
    // std::set<Cell> orders by x first; regroup by row.
    std::vector<Cell> by_row(c.cells().begin(), c.cells().end());
    std::sort(by_row.begin(), by_row.end(), [](const Cell& a, const Cell& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::size_t i = 0;
    for (std::int64_t row = box.min_y; !c.empty() && row <= box.max_y; ++row) {
        if (i < by_row.size() && by_row[i].y == row) {
            push_run(pending_rows, '$');
            pending_rows = 0;
            std::int64_t cursor = box.min_x;
            while (i < by_row.size() && by_row[i].y == row) {
                const std::int64_t start = by_row[i].x;
                std::int64_t end = start;
                ++i;
                while (i < by_row.size() && by_row[i].y == row && by_row[i].x == end + 1) {
                    ++end;
                    ++i;
                }
                push_run(start - cursor, 'b');
                push_run(end - start + 1, 'o');
                cursor = end + 1;
            }
        }
        if (row < box.max_y) ++pending_rows;
    }
    tokens.emplace_back("!");

    std::size_t width = 0;
    for (const auto& t : tokens) {
        if (width + t.size() > 70) {
            out << '\n';
            width = 0;
        }
        out << t;
        width += t.size();
    }
    return out.str();
}

std::string render_grid(const LifeConfig& c) {
    std::ostringstream out;
    if (c.empty()) {
        out << "origin=(0,0) width=0 height=0\n";
        return out.str();
    }
    const auto box = c.bounding_box();
    out << "origin=(" << box.min_x << ',' << box.min_y << ") width=" << box.width() << " height=" << box.height()
        << '\n';
    for (std::int64_t y = box.min_y; y <= box.max_y; ++y) {
        for (std::int64_t x = box.min_x; x <= box.max_x; ++x) out << (c.alive({x, y}) ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

}  // namespace orbitkit::life
