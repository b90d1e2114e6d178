#include "orbitkit/sparse_point.hpp"

#include <cctype>
#include <sstream>

#include "hash_util.hpp"
#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {
const BigInt kZero = 0;
}

SparsePoint::SparsePoint(std::initializer_list<std::pair<const Index, BigInt>> entries) {
    for (const auto& [i, v] : entries) set(i, v);
}

const BigInt& SparsePoint::get(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? kZero : it->second;
}

void SparsePoint::set(Index i, BigInt value) {
    if (value == 0) {
        entries_.erase(i);
    } else {
        entries_.insert_or_assign(i, std::move(value));
    }
}

std::vector<Index> SparsePoint::support() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& [i, v] : entries_) out.push_back(i);
    return out;
}

std::size_t SparsePoint::hash() const {
    std::size_t seed = entries_.size();
    std::hash<BigInt> hv;
    for (const auto& [i, v] : entries_) {
        detail::hash_combine(seed, std::hash<Index>{}(i));
        detail::hash_combine(seed, hv(v));
    }
    return seed;
}

std::string format_point(const SparsePoint& x) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, v] : x) {
        if (!first) out << ' ';
        out << i << ':' << v;
        first = false;
    }
    return out.str();
}

SparsePoint parse_point(std::string_view text) {
    SparsePoint x;
    std::size_t line = 1, col = 1, pos = 0;
    auto advance = [&] {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    };
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
        if (pos >= text.size()) break;
        const std::size_t tok_line = line, tok_col = col;
        std::string token;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            token.push_back(text[pos]);
            advance();
        }
        const auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw ParseError("expected index:value, got '" + token + "'", tok_line, tok_col);
        const std::string idx = token.substr(0, colon);
        const std::string val = token.substr(colon + 1);
        for (char c : idx)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad index '" + idx + "'", tok_line, tok_col);
        std::size_t digits_from = (val[0] == '-' || val[0] == '+') ? 1 : 0;
        if (digits_from == val.size())
            throw ParseError("bad value '" + val + "'", tok_line, tok_col + colon + 1);
        for (std::size_t k = digits_from; k < val.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(val[k])))
                throw ParseError("bad value '" + val + "'", tok_line, tok_col + colon + 1);
        Index i = 0;
        try {
            std::size_t used = 0;
            i = std::stoull(idx, &used);
        } catch (const std::out_of_range&) {
            throw ParseError("index out of range '" + idx + "'", tok_line, tok_col);
        }
        BigInt v(val[0] == '+' ? val.substr(1) : val);
        if (v == 0) throw ParseError("zero value for index " + idx, tok_line, tok_col);
        if (x.entries().count(i)) throw ParseError("duplicate index " + idx, tok_line, tok_col);
        x.set(i, std::move(v));
    }
    return x;
}

}  // namespace orbitkit
