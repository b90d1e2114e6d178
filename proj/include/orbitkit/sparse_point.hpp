#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitkit {

using BigInt = boost::multiprecision::cpp_int;

// Coordinate label in Z^N (and variable label for polynomials).
using Index = std::uint64_t;

// A finitely supported point of Z^N. Coordinates not stored read as zero;
// a stored entry is never zero.
class SparsePoint {
public:
    using Entries = std::map<Index, BigInt>;

    SparsePoint() = default;
    SparsePoint(std::initializer_list<std::pair<const Index, BigInt>> entries);

    const BigInt& get(Index i) const;
    void set(Index i, BigInt value);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::vector<Index> support() const;

    const Entries& entries() const { return entries_; }
    Entries::const_iterator begin() const { return entries_.begin(); }
    Entries::const_iterator end() const { return entries_.end(); }

    std::size_t hash() const;

    friend bool operator==(const SparsePoint&, const SparsePoint&) = default;

private:
    Entries entries_;
};

// `index:value` tokens separated by whitespace, indices ascending.
std::string format_point(const SparsePoint& x);

// Accepts tokens in any order; rejects duplicate indices and zero values.
SparsePoint parse_point(std::string_view text);

}  // namespace orbitkit

template <>
struct std::hash<orbitkit::SparsePoint> {
    std::size_t operator()(const orbitkit::SparsePoint& x) const noexcept { return x.hash(); }
};
