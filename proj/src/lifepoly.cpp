#include "orbitkit/lifepoly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace orbitkit::lifepoly {

Pattern9 pattern_from_bits(unsigned bits) {
    Pattern9 p{};
    for (unsigned i = 0; i < 9; ++i) p[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
    return p;
}

unsigned pattern_bits(const Pattern9& p) {
    unsigned bits = 0;
    for (unsigned i = 0; i < 9; ++i) bits |= static_cast<unsigned>(p[i] & 1u) << i;
    return bits;
}

bool next_state(const Pattern9& p) {
    int neighbors = 0;
    for (std::size_t i = 1; i < 9; ++i) neighbors += p[i];
    return p[0] ? (neighbors == 2 || neighbors == 3) : neighbors == 3;
}

poly::Product pattern_product(const Pattern9& p) {
    poly::Product prod;
    prod.factors.reserve(9);
    for (poly::VarIndex i = 0; i < 9; ++i) {
        const auto x = poly::Polynomial::var(i);
        prod.factors.push_back(p[i] ? x : poly::Polynomial(1) - x);
    }
    return prod;
}

poly::Polynomial pattern_term(const Pattern9& p) { return pattern_product(p).expand(); }

namespace {

LocalRule make_local_rule() {
    LocalRule rule;
    for (unsigned bits = 0; bits < 512; ++bits) {
        const auto p = pattern_from_bits(bits);
        if (next_state(p)) rule.factored.summands.push_back(pattern_product(p));
    }
    rule.expanded = rule.factored.expand();

    std::array<BigInt, 9> values;
    for (unsigned bits = 0; bits < 512; ++bits) {
        for (unsigned i = 0; i < 9; ++i) values[i] = (bits >> i) & 1u;
        BigInt unexpanded = 0;
        for (const auto& s : rule.factored.summands) {
            BigInt t = 1;
            for (const auto& f : s.factors) t *= poly::evaluate(f, std::span<const BigInt>(values));
            unexpanded += t;
        }
        if (unexpanded != poly::evaluate(rule.expanded, std::span<const BigInt>(values)))
            throw std::logic_error("local rule: expanded and factored forms disagree at pattern " +
                                   std::to_string(bits));
    }
    return rule;
}

}  // namespace

const LocalRule& local_rule() {
    static const LocalRule rule = make_local_rule();
    return rule;
}

poly::Polynomial build_local_rule() { return local_rule().expanded; }

Index pair(Index a, Index b) {
    using u128 = unsigned __int128;
    const u128 s = static_cast<u128>(a) + b;
    const u128 n = s * (s + 1) / 2 + b;
    if (n > std::numeric_limits<Index>::max())
        throw Error("pairing of (" + std::to_string(a) + "," + std::to_string(b) + ") overflows 64 bits");
    return static_cast<Index>(n);
}

std::pair<Index, Index> unpair(Index n) {
    using u128 = unsigned __int128;
    // Largest w with w(w+1)/2 <= n.
    auto tri = [](u128 w) { return w * (w + 1) / 2; };
    u128 w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
    while (w > 0 && tri(w) > n) --w;
    while (tri(w + 1) <= n) ++w;
    const u128 b = n - tri(w);
    const u128 a = w - b;
    return {static_cast<Index>(a), static_cast<Index>(b)};
}

const PairingSpec& cantor_pairing() {
    static const PairingSpec spec{"cantor", &pair, &unpair};
    return spec;
}

SparsePoint encode(const life::LifeConfig& c) {
    SparsePoint x;
    for (const auto& cell : c.cells()) {
        if (cell.x < 0 || cell.y < 0)
            throw OutOfQuadrant("live cell (" + std::to_string(cell.x) + "," + std::to_string(cell.y) +
                                ") lies outside the quadrant");
        x.set(pair(static_cast<Index>(cell.x), static_cast<Index>(cell.y)), 1);
    }
    return x;
}

life::LifeConfig decode(const SparsePoint& x) {
    std::set<life::Cell> cells;
    for (const auto& [idx, v] : x) {
        if (v != 1)
            throw NotAConfiguration("coordinate " + std::to_string(idx) + " holds " + v.str() +
                                    ", expected 0 or 1");
        const auto [a, b] = unpair(idx);
        if (a > static_cast<Index>(std::numeric_limits<std::int64_t>::max()) ||
            b > static_cast<Index>(std::numeric_limits<std::int64_t>::max()))
            throw NotAConfiguration("coordinate " + std::to_string(idx) + " decodes outside the cell range");
        cells.insert({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }
    return life::LifeConfig(std::move(cells));
}

GridRuleMap build_gol_map() {
    static const GridRuleMap map(build_local_rule(), cantor_pairing());
    return map;
}

bool quadrant_safe(const life::LifeConfig& c) {
    for (const auto& cell : c.cells())
        if (cell.x < 1 || cell.y < 1) return false;
    const auto next = life::step(c);
    for (const auto& cell : next.cells())
        if (cell.x < 0 || cell.y < 0) return false;
    return true;
}

}  // namespace orbitkit::lifepoly
