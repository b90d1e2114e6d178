#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>

// Budgeted detection of eventual periodicity for deterministic step
// functions.
//
// No total procedure can decide eventual periodicity of arbitrary
// trajectories (Turing machine runs, Life patterns, polynomial orbits), so
// detection is a semi-decision: a revisit found within the budget is
// reported exactly, and anything else within the budget is reported as
// Exhausted rather than "not periodic".
//
// A step function maps a state to its successor, or to std::nullopt when
// the trajectory ends (e.g. a Turing machine halts).
//
// Budget B is a horizon on trajectory positions x_0 .. x_B:
//   Periodic{λ, μ}  when x_{λ+μ} = x_λ is the first revisit and λ+μ <= B,
//   Terminated{n}   when x_n has no successor and n < B,
//   Exhausted{B}    otherwise.
// detect_hashset calls step at most B times and stores every state;
// detect_brent stores O(1) states and may call step a small constant factor
// more often, but returns the same verdict for the same B.
namespace orbitkit::cycles {

struct Periodic {
    std::uint64_t preperiod;  // λ: index of the first state on the cycle
    std::uint64_t period;     // μ >= 1
    friend bool operator==(const Periodic&, const Periodic&) = default;
};

struct Terminated {
    std::uint64_t steps;
    friend bool operator==(const Terminated&, const Terminated&) = default;
};

struct Exhausted {
    std::uint64_t budget;
    friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using CycleVerdict = std::variant<Periodic, Terminated, Exhausted>;

struct Options {
    // Report Terminated{n} as Periodic{n, 1}: the final state is treated as
    // a fixed point.
    bool halting_is_fixed_point = false;
    // Incremented once per step invocation when set.
    std::uint64_t* step_calls = nullptr;
};

// `verdict=periodic preperiod=3 period=4` and friends.
std::string report_line(const CycleVerdict& v);

namespace detail {

inline CycleVerdict finish(CycleVerdict v, const Options& opt) {
    if (opt.halting_is_fixed_point)
        if (const auto* t = std::get_if<Terminated>(&v)) return Periodic{t->steps, 1};
    return v;
}

template <class State, class Step>
std::optional<State> call(Step& step, const State& s, const Options& opt) {
    if (opt.step_calls) ++*opt.step_calls;
    return step(s);
}

}  // namespace detail

template <class State, class Step, class Hash = std::hash<State>>
CycleVerdict detect_hashset(Step step, State start, std::uint64_t budget, Options opt = {}) {
    std::unordered_map<State, std::uint64_t, Hash> first_seen;
    State current = std::move(start);
    for (std::uint64_t i = 0; i < budget; ++i) {
        std::optional<State> next = detail::call(step, current, opt);
        if (!next) return detail::finish(Terminated{i}, opt);
        first_seen.emplace(std::move(current), i);
        if (auto it = first_seen.find(*next); it != first_seen.end())
            return Periodic{it->second, i + 1 - it->second};
        current = std::move(*next);
    }
    return Exhausted{budget};
}

template <class State, class Step>
CycleVerdict detect_brent(Step step, State start, std::uint64_t budget, Options opt = {}) {
    if (budget == 0) return Exhausted{0};

    // Phase 1: the tortoise waits at index power-1 while the hare walks up
    // to `power` further steps; the first match gives μ. If λ+μ <= B a
    // match occurs by the phase whose power is the least power of two >= B.
    std::uint64_t cap = 1;
    while (cap < budget) cap <<= 1;

    std::uint64_t hare_index = 0;
    std::uint64_t power = 1;
    std::uint64_t lam = 0;
    State tortoise = start;
    State hare = start;
    std::optional<std::uint64_t> mu;
    while (true) {
        std::optional<State> next = detail::call(step, hare, opt);
        if (!next) {
            if (hare_index < budget) return detail::finish(Terminated{hare_index}, opt);
            return Exhausted{budget};
        }
        hare = std::move(*next);
        ++hare_index;
        ++lam;
        if (tortoise == hare) {
            mu = lam;
            break;
        }
        if (lam == power) {
            if (power >= cap) return Exhausted{budget};
            tortoise = hare;
            power <<= 1;
            lam = 0;
        }
    }

    // Phase 2: hare starts μ ahead of the tortoise; they meet at index λ.
    tortoise = start;
    hare = std::move(start);
    for (std::uint64_t i = 0; i < *mu; ++i) hare = std::move(*detail::call(step, hare, opt));
    std::uint64_t lambda = 0;
    while (!(tortoise == hare)) {
        tortoise = std::move(*detail::call(step, tortoise, opt));
        hare = std::move(*detail::call(step, hare, opt));
        ++lambda;
    }
    if (lambda + *mu > budget) return Exhausted{budget};
    return Periodic{lambda, *mu};
}

enum class Algorithm { HashSet, Brent };

template <class State, class Step, class Hash = std::hash<State>>
CycleVerdict detect(Algorithm algo, Step step, State start, std::uint64_t budget, Options opt = {}) {
    if (algo == Algorithm::Brent) return detect_brent<State>(std::move(step), std::move(start), budget, opt);
    return detect_hashset<State, Step, Hash>(std::move(step), std::move(start), budget, opt);
}

}  // namespace orbitkit::cycles
