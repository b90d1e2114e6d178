#include "orbitkit/turing.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hash_util.hpp"

namespace orbitkit::turing {

using Kind = DescriptionError::Kind;

TMDesc::TMDesc(const Spec& spec) {
    auto add_state = [&](const std::string& name) {
        if (name.empty()) throw DescriptionError(Kind::Syntax, "empty state name");
        if (state_ids_.count(name)) return;
        state_ids_.emplace(name, static_cast<StateId>(state_names_.size()));
        state_names_.push_back(name);
    };
    for (const auto& q : spec.states) add_state(q);
    if (spec.accept.empty() || spec.reject.empty())
        throw DescriptionError(Kind::MissingHeader, "accept and reject states are required");
    if (spec.accept == spec.reject)
        throw DescriptionError(Kind::HaltingStates, "accept and reject states must differ (both '" + spec.accept + "')");
    add_state(spec.accept);
    add_state(spec.reject);
    if (!state_ids_.count(spec.start))
        throw DescriptionError(Kind::UnknownState, "start state '" + spec.start + "' is not declared");

    for (const auto& s : spec.tape_alphabet) {
        if (s.empty()) throw DescriptionError(Kind::Syntax, "empty tape symbol");
        if (symbol_ids_.count(s)) throw DescriptionError(Kind::Alphabet, "tape symbol '" + s + "' declared twice");
        symbol_ids_.emplace(s, static_cast<SymbolId>(symbol_names_.size()));
        symbol_names_.push_back(s);
    }
    if (!symbol_ids_.count(spec.blank))
        throw DescriptionError(Kind::Alphabet, "blank symbol '" + spec.blank + "' is not in the tape alphabet");
    input_.assign(symbol_names_.size(), false);
    for (const auto& s : spec.input_alphabet) {
        if (s == spec.blank)
            throw DescriptionError(Kind::Alphabet, "blank symbol '" + s + "' must not be in the input alphabet");
        auto it = symbol_ids_.find(s);
        if (it == symbol_ids_.end())
            throw DescriptionError(Kind::Alphabet, "input symbol '" + s + "' is not in the tape alphabet");
        input_[it->second] = true;
    }

    start_ = state_ids_.at(spec.start);
    accept_ = state_ids_.at(spec.accept);
    reject_ = state_ids_.at(spec.reject);
    blank_ = symbol_ids_.at(spec.blank);

    delta_.assign(state_names_.size() * symbol_names_.size(), std::nullopt);
    for (const auto& r : spec.rules) {
        auto q = state_id(r.state), q2 = state_id(r.next);
        if (!q) throw DescriptionError(Kind::UnknownState, "unknown state '" + r.state + "'", r.line);
        if (!q2) throw DescriptionError(Kind::UnknownState, "unknown state '" + r.next + "'", r.line);
        auto s = symbol_id(r.read), s2 = symbol_id(r.write);
        if (!s) throw DescriptionError(Kind::UnknownSymbol, "unknown symbol '" + r.read + "'", r.line);
        if (!s2) throw DescriptionError(Kind::UnknownSymbol, "unknown symbol '" + r.write + "'", r.line);
        auto& slot = delta_[*q * symbol_names_.size() + *s];
        if (slot)
            throw DescriptionError(Kind::DuplicateRule, "duplicate rule for (" + r.state + ", " + r.read + ")", r.line);
        slot = Action{*q2, *s2, r.move};
    }
    for (StateId q = 0; q < state_names_.size(); ++q) {
        if (is_halting(q)) continue;
        for (SymbolId s = 0; s < symbol_names_.size(); ++s)
            if (!delta_[q * symbol_names_.size() + s])
                throw DescriptionError(Kind::MissingTransition,
                                       "no transition for (" + state_names_[q] + ", " + symbol_names_[s] + ")");
    }
}

std::optional<StateId> TMDesc::state_id(std::string_view name) const {
    auto it = state_ids_.find(std::string(name));
    if (it == state_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<SymbolId> TMDesc::symbol_id(std::string_view name) const {
    auto it = symbol_ids_.find(std::string(name));
    if (it == symbol_ids_.end()) return std::nullopt;
    return it->second;
}

// --- Configuration ------------------------------------------------------------

Configuration::Configuration(StateId state, std::map<std::uint64_t, SymbolId> tape, std::uint64_t head,
                             SymbolId blank)
    : state_(state), head_(head) {
    for (const auto& [cell, s] : tape)
        if (s != blank) tape_.emplace(cell, s);
}

SymbolId Configuration::read(std::uint64_t cell, SymbolId blank) const {
    auto it = tape_.find(cell);
    return it == tape_.end() ? blank : it->second;
}

void Configuration::write(std::uint64_t cell, SymbolId s, SymbolId blank) {
    if (s == blank) {
        tape_.erase(cell);
    } else {
        tape_.insert_or_assign(cell, s);
    }
}

std::size_t Configuration::hash() const {
    std::size_t seed = state_;
    detail::hash_combine(seed, std::hash<std::uint64_t>{}(head_));
    for (const auto& [cell, s] : tape_) {
        detail::hash_combine(seed, std::hash<std::uint64_t>{}(cell));
        detail::hash_combine(seed, s);
    }
    return seed;
}

// --- Semantics ------------------------------------------------------------------

Word split_word(std::string_view text) {
    Word w;
    const bool delimited = text.find_first_of(" \t,") != std::string_view::npos;
    if (!delimited) {
        for (char c : text) w.emplace_back(1, c);
        return w;
    }
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) w.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) w.push_back(std::move(cur));
    return w;
}

Configuration initial_config(const TMDesc& m, const Word& w) {
    std::map<std::uint64_t, SymbolId> tape;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto s = m.symbol_id(w[i]);
        if (!s || !m.in_input_alphabet(*s))
            throw InvalidInput("input symbol '" + w[i] + "' at position " + std::to_string(i) +
                               " is not in the input alphabet");
        tape.emplace(i, *s);
    }
    return Configuration(m.start(), std::move(tape), 0, m.blank());
}

StepOutcome tm_step(const TMDesc& m, const Configuration& c) {
    if (c.state() >= m.state_count())
        throw CorruptConfiguration("configuration state id " + std::to_string(c.state()) + " is not a machine state");
    if (c.state() == m.accept()) return Halted{HaltKind::Accept};
    if (c.state() == m.reject()) return Halted{HaltKind::Reject};
    const auto& a = m.transition(c.state(), c.read(c.head(), m.blank()));
    Configuration next = c;
    next.write(c.head(), a.write, m.blank());
    if (a.move == Move::Right) {
        next.set_head(c.head() + 1);
    } else if (c.head() > 0) {
        next.set_head(c.head() - 1);
    }
    next.set_state(a.next);
    return next;
}

Trajectory::Trajectory(const TMDesc& m, const Word& w) : machine_(&m), initial_(initial_config(m, w)) {}

Trajectory::iterator& Trajectory::iterator::operator++() {
    auto out = tm_step(*machine_, *current_);
    if (auto* c = std::get_if<Configuration>(&out)) {
        current_ = std::move(*c);
    } else {
        current_.reset();
    }
    return *this;
}

// --- Text format ------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

TMDesc parse_tm(std::string_view text) {
    TMDesc::Spec spec;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    for (std::size_t start = 0; start <= text.size();) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (const auto arrow = line.find("->"); arrow != std::string::npos) {
            const auto lhs = split_list(line.substr(0, arrow));
            const auto rhs = split_list(line.substr(arrow + 2));
            if (lhs.size() != 2 || rhs.size() != 3)
                throw DescriptionError(Kind::Syntax, "rule must read 'q, s -> q2, s2, L|R'", line_no);
            Move mv;
            if (rhs[2] == "L") {
                mv = Move::Left;
            } else if (rhs[2] == "R") {
                mv = Move::Right;
            } else {
                throw DescriptionError(Kind::Syntax, "move must be L or R, got '" + rhs[2] + "'", line_no);
            }
            spec.rules.push_back({lhs[0], lhs[1], rhs[0], rhs[1], mv, line_no});
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string::npos) throw DescriptionError(Kind::Syntax, "expected 'key: value' or a rule", line_no);
        const std::string key = trim(std::string_view(line).substr(0, colon));
        const std::string value = trim(std::string_view(line).substr(colon + 1));
        if (!seen.insert(key).second) throw DescriptionError(Kind::Syntax, "header '" + key + "' repeated", line_no);
        auto single = [&]() {
            const auto items = split_list(value);
            if (items.size() != 1) throw DescriptionError(Kind::Syntax, "header '" + key + "' takes one name", line_no);
            return items[0];
        };
        if (key == "states") {
            spec.states = split_list(value);
        } else if (key == "input") {
            spec.input_alphabet = split_list(value);
        } else if (key == "tape") {
            spec.tape_alphabet = split_list(value);
        } else if (key == "blank") {
            spec.blank = single();
        } else if (key == "start") {
            spec.start = single();
        } else if (key == "accept") {
            spec.accept = single();
        } else if (key == "reject") {
            spec.reject = single();
        } else {
            throw DescriptionError(Kind::Syntax, "unknown header '" + key + "'", line_no);
        }
    }
    for (const char* required : {"states", "input", "tape", "blank", "start", "accept", "reject"})
        if (!seen.count(required))
            throw DescriptionError(Kind::MissingHeader, std::string("missing header '") + required + "'");
    return TMDesc(spec);
}

std::string format_config(const TMDesc& m, const Configuration& c) {
    std::ostringstream out;
    out << "q=" << (c.state() < m.state_count() ? m.state_name(c.state()) : "?") << " head=" << c.head() << " tape=";
    bool first = true;
    for (const auto& [cell, s] : c.tape()) {
        if (!first) out << ',';
        out << (s < m.symbol_count() ? m.symbol_name(s) : "?") << '@' << cell;
        first = false;
    }
    return out.str();
}

}  // namespace orbitkit::turing
