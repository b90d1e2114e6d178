#include "orbitkit/orbit.hpp"

#include <unordered_set>

#include "orbitkit/error.hpp"

namespace orbitkit::orbit {

std::string limit_name(Limit l) {
    switch (l) {
        case Limit::MaxSteps:
            return "max_steps";
        case Limit::MaxPoints:
            return "max_points";
        case Limit::MaxDepth:
            return "max_depth";
    }
    return "unknown";
}

std::string report_line(const StabilityVerdict& v) {
    if (const auto* s = std::get_if<Stable>(&v)) {
        std::string out = "verdict=stable orbit_size=" + std::to_string(s->orbit_size);
        if (s->witness)
            out += " preperiod=" + std::to_string(s->witness->preperiod) +
                   " period=" + std::to_string(s->witness->period);
        return out;
    }
    const auto& u = std::get<Unknown>(v);
    return "verdict=unknown points=" + std::to_string(u.points_explored) + " limit=" + limit_name(u.limit);
}

GeneratorSet::GeneratorSet(std::vector<PolyMapDesc> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw Error("generator set must be nonempty");
}

StabilityVerdict is_stable_singleton(const PolyMapDesc& f, const SparsePoint& x, std::uint64_t budget,
                                     cycles::Algorithm algo) {
    if (budget == 0) throw Error("budget must be at least 1");
    auto step = [&f](const SparsePoint& p) -> std::optional<SparsePoint> { return orbitkit::apply(f, p); };
    const auto v = cycles::detect<SparsePoint>(algo, step, x, budget);
    if (const auto* p = std::get_if<cycles::Periodic>(&v)) return Stable{p->preperiod + p->period, *p};
    return Unknown{budget + 1, Limit::MaxSteps};
}

Closure explore_orbit(const GeneratorSet& s, const SparsePoint& x, std::uint64_t max_points,
                      std::uint64_t max_depth) {
    if (max_points == 0 || max_depth == 0) throw Error("orbit limits must be at least 1");
    Closure out;
    std::unordered_set<SparsePoint> seen{x};
    out.visited.push_back(x);
    std::vector<SparsePoint> frontier{x};
    for (std::uint64_t depth = 0;; ++depth) {
        if (frontier.empty()) {
            out.verdict = Stable{out.visited.size(), std::nullopt};
            return out;
        }
        if (depth == max_depth) {
            out.verdict = Unknown{out.visited.size(), Limit::MaxDepth};
            return out;
        }
        std::vector<SparsePoint> next;
        for (const auto& p : frontier) {
            for (const auto& g : s.maps()) {
                SparsePoint y = orbitkit::apply(g, p);
                if (seen.count(y)) continue;
                if (out.visited.size() == max_points) {
                    out.verdict = Unknown{out.visited.size(), Limit::MaxPoints};
                    return out;
                }
                seen.insert(y);
                out.visited.push_back(y);
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
}

StabilityVerdict orbit_closure(const GeneratorSet& s, const SparsePoint& x, std::uint64_t max_points,
                               std::uint64_t max_depth) {
    return explore_orbit(s, x, max_points, max_depth).verdict;
}

bool closed_under(const GeneratorSet& s, const std::vector<SparsePoint>& points) {
    const std::unordered_set<SparsePoint> members(points.begin(), points.end());
    for (const auto& p : points)
        for (const auto& g : s.maps())
            if (!members.count(orbitkit::apply(g, p))) return false;
    return true;
}

}  // namespace orbitkit::orbit
