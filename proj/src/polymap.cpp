#include "orbitkit/polymap.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hash_util.hpp"
#include "orbitkit/error.hpp"

namespace orbitkit::poly {

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::var(VarIndex v, Exponent e) {
    Monomial m;
    if (e != 0) m.factors_.emplace_back(v, e);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t Monomial::hash() const {
    std::size_t seed = factors_.size();
    for (const auto& [v, e] : factors_) {
        detail::hash_combine(seed, std::hash<VarIndex>{}(v));
        detail::hash_combine(seed, e);
    }
    return seed;
}

namespace {

// True when a precedes b in display order.
bool display_before(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return fa.size() < fb.size();
}

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v);
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(BigInt constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::var(VarIndex v) { return term(1, Monomial::var(v)); }

Polynomial Polynomial::term(BigInt coefficient, Monomial m) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(std::move(m), std::move(coefficient));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, BigInt>> terms) {
    Polynomial p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Monomial, BigInt>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    *this = *this * q;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    out.terms_.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
    return out;
}

Polynomial operator-(const Polynomial& p) {
    Polynomial out = p;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::size_t Polynomial::hash() const {
    // Order-independent: sum of per-term hashes.
    std::size_t total = terms_.size();
    std::hash<BigInt> hc;
    for (const auto& [m, c] : terms_) {
        std::size_t h = m.hash();
        detail::hash_combine(h, hc(c));
        total += h;
    }
    return total;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, Exponent e) {
    Polynomial result = 1;
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

BigInt evaluate(const Polynomial& p, const SparsePoint& a) {
    return evaluate_with(p, [&](VarIndex v) -> const BigInt& { return a.get(v); });
}

BigInt evaluate(const Polynomial& p, std::span<const BigInt> values) {
    static const BigInt zero = 0;
    return evaluate_with(p, [&](VarIndex v) -> const BigInt& {
        return v < values.size() ? values[v] : zero;
    });
}

Polynomial substitute(const Polynomial& p, const Substitution& s) {
    if (s.empty()) return p;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial(c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = s.find(v);
            if (it == s.end()) {
                kept.emplace_back(v, e);
            } else {
                t *= pow(it->second, e);
            }
        }
        if (!kept.empty()) t *= Polynomial::term(1, Monomial::from_factors(std::move(kept)));
        out += t;
    }
    return out;
}

std::set<VarIndex> support_vars(const Polynomial& p) {
    std::set<VarIndex> out;
    for (const auto& [m, c] : p.terms())
        for (const auto& f : m.factors()) out.insert(f.first);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms()) {
        BigInt shown = c;
        if (!first) {
            if (c < 0) {
                out << " - ";
                shown = -c;
            } else {
                out << " + ";
            }
        }
        out << shown;
        if (!m.is_constant()) out << '*' << monomial_text(m);
        first = false;
    }
    return out.str();
}

// --- Parser -----------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse_all() {
        Polynomial p = expr();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_space();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out.push_back(text_[pos_++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        while (accept('*')) p *= unary();
        return p;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            const std::string e = digits();
            if (e.size() > 9) fail("exponent too large");
            return pow(base, static_cast<Exponent>(std::stoul(e)));
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected variable index after 'x'");
            const std::string idx = digits();
            try {
                return Polynomial::var(std::stoull(idx));
            } catch (const std::out_of_range&) {
                fail("variable index out of range");
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(BigInt(digits()));
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).parse_all(); }

// --- Structural forms -------------------------------------------------------

Polynomial Product::expand() const {
    Polynomial p = 1;
    for (const auto& f : factors) p *= f;
    return p;
}

Polynomial SumOfProducts::expand() const {
    Polynomial p;
    for (const auto& s : summands) p += s.expand();
    return p;
}

std::string to_string(const Product& p) {
    if (p.factors.empty()) return "1";
    std::string out;
    for (const auto& f : p.factors) {
        if (!out.empty()) out += '*';
        if (f.term_count() == 1 && f.terms().begin()->second == 1 &&
            !f.terms().begin()->first.is_constant()) {
            out += monomial_text(f.terms().begin()->first);
        } else if (f.term_count() == 1 && f.terms().begin()->second > 0) {
            out += to_string(f);
        } else {
            out += '(' + to_string(f) + ')';
        }
    }
    return out;
}

std::string to_string(const SumOfProducts& s) {
    if (s.summands.empty()) return "0";
    std::string out;
    for (const auto& p : s.summands) {
        if (!out.empty()) out += " + ";
        out += to_string(p);
    }
    return out;
}

}  // namespace orbitkit::poly
