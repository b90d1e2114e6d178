#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitkit/sparse_point.hpp"

namespace orbitkit::poly {

using VarIndex = Index;
using Exponent = std::uint32_t;

// Product of variable powers, stored sorted by variable with no zero
// exponents. The empty monomial is the constant 1.
class Monomial {
public:
    using Factor = std::pair<VarIndex, Exponent>;

    Monomial() = default;
    static Monomial var(VarIndex v, Exponent e = 1);
    // Factors in any order; repeated variables are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint64_t degree() const;
    bool is_constant() const { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const;

private:
    std::vector<Factor> factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Sparse multivariate polynomial over Z in canonical form: a map from
// monomial to nonzero coefficient. Equality is equality of term maps.
class Polynomial {
public:
    using Terms = std::unordered_map<Monomial, BigInt, MonomialHash>;

    Polynomial() = default;
    Polynomial(BigInt constant);  // NOLINT: integers promote to constants
    Polynomial(int constant) : Polynomial(BigInt(constant)) {}

    static Polynomial var(VarIndex v);
    static Polynomial term(BigInt coefficient, Monomial m);
    // Builds a canonical polynomial from possibly repeated or zero terms.
    static Polynomial from_terms(std::vector<std::pair<Monomial, BigInt>> terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t degree() const;
    BigInt coefficient(const Monomial& m) const;

    // Terms in display order: descending total degree, then graded-lex.
    std::vector<std::pair<Monomial, BigInt>> sorted_terms() const;

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::size_t hash() const;

private:
    void add_term(const Monomial& m, const BigInt& c);

    Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, Exponent e);

// Evaluation with an arbitrary lookup `VarIndex -> BigInt`.
template <class Lookup>
BigInt evaluate_with(const Polynomial& p, Lookup&& value_of) {
    BigInt total = 0;
    for (const auto& [m, c] : p.terms()) {
        BigInt t = c;
        for (const auto& [v, e] : m.factors()) {
            const BigInt& x = value_of(v);
            if (x == 0) {
                t = 0;
                break;
            }
            if (e == 1) {
                t *= x;
            } else {
                t *= boost::multiprecision::pow(BigInt(x), e);
            }
        }
        total += t;
    }
    return total;
}

// Unlisted variables read as 0.
BigInt evaluate(const Polynomial& p, const SparsePoint& a);
// Dense assignment: variable i reads values[i]; variables past the end read 0.
BigInt evaluate(const Polynomial& p, std::span<const BigInt> values);

using Substitution = std::map<VarIndex, Polynomial>;

// Replaces each mapped variable by its image; unmapped variables stay.
Polynomial substitute(const Polynomial& p, const Substitution& s);

std::set<VarIndex> support_vars(const Polynomial& p);

// Text format, e.g. `-1*x0^2*x1 + 3*x4 + 2`; the zero polynomial is `0`.
std::string to_string(const Polynomial& p);

// Parses the output of to_string and, more generally, integer expressions in
// variables `x<n>` built from + - * ^ and parentheses.
Polynomial parse(std::string_view text);

// A sum of products of polynomials, kept un-expanded for display and for
// structural checks. Semantics are those of expand().
struct Product {
    std::vector<Polynomial> factors;

    Polynomial expand() const;
};

struct SumOfProducts {
    std::vector<Product> summands;

    Polynomial expand() const;
};

// e.g. `(-1*x0 + 1)*x1*x2 + ...`; multi-term factors are parenthesized.
std::string to_string(const Product& p);
std::string to_string(const SumOfProducts& s);

}  // namespace orbitkit::poly

template <>
struct std::hash<orbitkit::poly::Polynomial> {
    std::size_t operator()(const orbitkit::poly::Polynomial& p) const noexcept { return p.hash(); }
};
