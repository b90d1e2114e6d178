#include "orbitkit/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "hash_util.hpp"

namespace orbitkit {

namespace {

struct GridCell {
    Index a;
    Index b;
    friend bool operator==(const GridCell&, const GridCell&) = default;
    friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

struct GridCellHash {
    std::size_t operator()(const GridCell& c) const noexcept {
        std::size_t seed = std::hash<Index>{}(c.a);
        detail::hash_combine(seed, std::hash<Index>{}(c.b));
        return seed;
    }
};

// Neighbor of `c` at offset `o`, or nothing when it leaves the quadrant.
std::optional<GridCell> shifted(GridCell c, Offset o) {
    if ((o.dx < 0 && c.a == 0) || (o.dy < 0 && c.b == 0)) return std::nullopt;
    if ((o.dx > 0 && c.a == std::numeric_limits<Index>::max()) ||
        (o.dy > 0 && c.b == std::numeric_limits<Index>::max()))
        return std::nullopt;
    return GridCell{c.a + o.dx, c.b + o.dy};
}

}  // namespace

FiniteComponentMap compose(const FiniteComponentMap& outer, const FiniteComponentMap& inner) {
    FiniteComponentMap out = inner;
    const poly::Substitution subst(inner.components.begin(), inner.components.end());
    for (const auto& [i, p] : outer.components) out.components[i] = poly::substitute(p, subst);
    return out;
}

FiniteComponentMap parse_component_map(std::string_view text) {
    FiniteComponentMap m;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        if (first == line.size()) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected '<index>: <polynomial>'", line_no, first + 1);
        std::string idx(line.substr(first, colon - first));
        while (!idx.empty() && std::isspace(static_cast<unsigned char>(idx.back()))) idx.pop_back();
        if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad component index '" + idx + "'", line_no, first + 1);
        Index i = 0;
        try {
            i = std::stoull(idx);
        } catch (const std::out_of_range&) {
            throw ParseError("component index out of range", line_no, first + 1);
        }
        if (m.components.count(i)) throw ParseError("duplicate component " + idx, line_no, first + 1);
        poly::Polynomial p;
        try {
            p = poly::parse(line.substr(colon + 1));
        } catch (const ParseError& e) {
            throw ParseError("bad polynomial for component " + idx, line_no, colon + 1 + e.column());
        }
        m.components.emplace(i, std::move(p));
    }
    return m;
}

std::string format_component_map(const FiniteComponentMap& m) {
    std::ostringstream out;
    for (const auto& [i, p] : m.components) out << i << ": " << poly::to_string(p) << '\n';
    return out.str();
}

GridRuleMap::GridRuleMap(poly::Polynomial rule, PairingSpec pairing)
    : rule_(std::move(rule)), pairing_(std::move(pairing)) {
    for (auto v : poly::support_vars(rule_))
        if (v >= kNeighborhood.size())
            throw Error("grid rule uses variable x" + std::to_string(v) + " outside the 3x3 neighborhood");
    if (poly::evaluate(rule_, SparsePoint{}) != 0) throw Error("grid rule does not vanish on the all-zero neighborhood");
    auto table = std::make_shared<std::array<BigInt, 512>>();
    std::array<BigInt, 9> values;
    for (unsigned bits = 0; bits < 512; ++bits) {
        for (unsigned i = 0; i < 9; ++i) values[i] = (bits >> i) & 1u;
        (*table)[bits] = poly::evaluate(rule_, std::span<const BigInt>(values));
    }
    boolean_table_ = std::move(table);
}

BigInt GridRuleMap::evaluate_local(std::span<const BigInt, 9> values) const {
    unsigned bits = 0;
    for (unsigned i = 0; i < 9; ++i) {
        if (values[i] == 1) {
            bits |= 1u << i;
        } else if (values[i] != 0) {
            return poly::evaluate(rule_, std::span<const BigInt>(values.data(), values.size()));
        }
    }
    return (*boolean_table_)[bits];
}

SparsePoint apply(const FiniteComponentMap& m, const SparsePoint& x) {
    SparsePoint out = x;
    for (const auto& [i, p] : m.components) out.set(i, poly::evaluate(p, x));
    return out;
}

SparsePoint apply(const GridRuleMap& m, const SparsePoint& x) {
    const auto& pairing = m.pairing();
    std::unordered_map<GridCell, const BigInt*, GridCellHash> live;
    live.reserve(x.size());
    for (const auto& [idx, v] : x) {
        const auto [a, b] = pairing.inverse(idx);
        Index back = 0;
        try {
            back = pairing.forward(a, b);
        } catch (const Error&) {
            throw MalformedPoint("coordinate " + std::to_string(idx) + " is not in the image of pairing " + pairing.name);
        }
        if (back != idx)
            throw MalformedPoint("coordinate " + std::to_string(idx) + " is not in the image of pairing " + pairing.name);
        live.emplace(GridCell{a, b}, &v);
    }

    std::set<GridCell> candidates;
    for (const auto& [cell, v] : live)
        for (const auto& o : kNeighborhood)
            if (auto n = shifted(cell, o)) candidates.insert(*n);

    static const BigInt zero = 0;
    SparsePoint out;
    std::array<BigInt, 9> values;
    for (const auto& c : candidates) {
        for (std::size_t i = 0; i < kNeighborhood.size(); ++i) {
            const auto n = shifted(c, kNeighborhood[i]);
            const BigInt* v = &zero;
            if (n) {
                if (auto it = live.find(*n); it != live.end()) v = it->second;
            }
            values[i] = *v;
        }
        BigInt next = m.evaluate_local(values);
        if (next != 0) {
            Index idx = 0;
            try {
                idx = pairing.forward(c.a, c.b);
            } catch (const Error&) {
                throw MalformedPoint("image cell (" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                     ") does not fit pairing " + pairing.name);
            }
            out.set(idx, std::move(next));
        }
    }
    return out;
}

SparsePoint apply(const PolyMapDesc& m, const SparsePoint& x) {
    return std::visit([&](const auto& map) { return orbitkit::apply(map, x); }, m);
}

SparsePoint iterate(const PolyMapDesc& m, SparsePoint x, std::uint64_t n) {
    for (std::uint64_t k = 0; k < n; ++k) x = orbitkit::apply(m, x);
    return x;
}

}  // namespace orbitkit
