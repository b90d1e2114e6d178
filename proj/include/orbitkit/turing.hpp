#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "orbitkit/error.hpp"

// Deterministic single-tape Turing machines on a one-way infinite tape. A
// left move from cell 0 leaves the head in place.
namespace orbitkit::turing {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

enum class Move { Left, Right };

struct Action {
    StateId next;
    SymbolId write;
    Move move;

    friend bool operator==(const Action&, const Action&) = default;
};

// Diagnostics raised by parse_tm / TMDesc validation.
class DescriptionError : public Error {
public:
    enum class Kind {
        Syntax,
        MissingHeader,
        DuplicateRule,
        UnknownState,
        UnknownSymbol,
        MissingTransition,
        Alphabet,
        HaltingStates,
    };

    DescriptionError(Kind kind, const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

// Input word contains a symbol outside the input alphabet.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Configuration refers to a state the machine does not have.
class CorruptConfiguration : public Error {
public:
    using Error::Error;
};

// Symbols and states are named by strings and interned to dense ids.
// Transitions of the two halting states are never consulted.
class TMDesc {
public:
    struct Spec {
        std::vector<std::string> states;  // halting states may be omitted
        std::vector<std::string> input_alphabet;
        std::vector<std::string> tape_alphabet;
        std::string blank;
        std::string start;
        std::string accept;
        std::string reject;
        // (state, read) -> (next, write, move), by name.
        struct Rule {
            std::string state, read, next, write;
            Move move;
            std::size_t line = 0;
        };
        std::vector<Rule> rules;
    };

    // Validates every structural requirement; throws DescriptionError.
    explicit TMDesc(const Spec& spec);

    std::size_t state_count() const { return state_names_.size(); }
    std::size_t symbol_count() const { return symbol_names_.size(); }
    const std::string& state_name(StateId q) const { return state_names_.at(q); }
    const std::string& symbol_name(SymbolId s) const { return symbol_names_.at(s); }
    std::optional<StateId> state_id(std::string_view name) const;
    std::optional<SymbolId> symbol_id(std::string_view name) const;

    StateId start() const { return start_; }
    StateId accept() const { return accept_; }
    StateId reject() const { return reject_; }
    SymbolId blank() const { return blank_; }
    bool is_halting(StateId q) const { return q == accept_ || q == reject_; }
    bool in_input_alphabet(SymbolId s) const { return input_.at(s); }

    // Defined for every non-halting state and tape symbol.
    const Action& transition(StateId q, SymbolId s) const { return delta_[q * symbol_names_.size() + s].value(); }

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> symbol_names_;
    std::unordered_map<std::string, StateId> state_ids_;
    std::unordered_map<std::string, SymbolId> symbol_ids_;
    std::vector<bool> input_;
    std::vector<std::optional<Action>> delta_;
    StateId start_ = 0, accept_ = 0, reject_ = 0;
    SymbolId blank_ = 0;
};

// (q, w, i). Blank cells are never stored, so equality is semantic.
class Configuration {
public:
    Configuration() = default;
    Configuration(StateId state, std::map<std::uint64_t, SymbolId> tape, std::uint64_t head, SymbolId blank);

    StateId state() const { return state_; }
    std::uint64_t head() const { return head_; }
    const std::map<std::uint64_t, SymbolId>& tape() const { return tape_; }
    SymbolId read(std::uint64_t cell, SymbolId blank) const;

    void set_state(StateId q) { state_ = q; }
    void set_head(std::uint64_t h) { head_ = h; }
    void write(std::uint64_t cell, SymbolId s, SymbolId blank);

    std::size_t hash() const;
    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    StateId state_ = 0;
    std::map<std::uint64_t, SymbolId> tape_;
    std::uint64_t head_ = 0;
};

enum class HaltKind { Accept, Reject };

struct Halted {
    HaltKind kind;
    friend bool operator==(const Halted&, const Halted&) = default;
};

using StepOutcome = std::variant<Configuration, Halted>;

// Input words are sequences of symbol names.
using Word = std::vector<std::string>;

// Splits a word: whitespace- or comma-separated names when the text contains
// either, otherwise one symbol per character.
Word split_word(std::string_view text);

Configuration initial_config(const TMDesc& m, const Word& w);
StepOutcome tm_step(const TMDesc& m, const Configuration& c);

// The run of m on w: c_0 = initial_config, then successive tm_step results
// until a halting configuration. Restartable; each iterator walks lazily.
class Trajectory {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Configuration;
        using difference_type = std::ptrdiff_t;
        using pointer = const Configuration*;
        using reference = const Configuration&;

        iterator() = default;
        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

    private:
        friend class Trajectory;
        iterator(const TMDesc* m, Configuration c) : machine_(m), current_(std::move(c)) {}

        const TMDesc* machine_ = nullptr;
        std::optional<Configuration> current_;
    };

    Trajectory(const TMDesc& m, const Word& w);

    iterator begin() const { return iterator(machine_, initial_); }
    std::default_sentinel_t end() const { return {}; }

private:
    const TMDesc* machine_;
    Configuration initial_;
};

inline Trajectory trajectory(const TMDesc& m, const Word& w) { return Trajectory(m, w); }

// Line-oriented description; see docs/tm-format.md.
TMDesc parse_tm(std::string_view text);

// `q=<state> head=<i> tape=<sym>@<cell>,...`
std::string format_config(const TMDesc& m, const Configuration& c);

}  // namespace orbitkit::turing

template <>
struct std::hash<orbitkit::turing::Configuration> {
    std::size_t operator()(const orbitkit::turing::Configuration& c) const noexcept { return c.hash(); }
};
