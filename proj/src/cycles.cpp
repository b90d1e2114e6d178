#include "orbitkit/cycles.hpp"

namespace orbitkit::cycles {

std::string report_line(const CycleVerdict& v) {
    if (const auto* p = std::get_if<Periodic>(&v))
        return "verdict=periodic preperiod=" + std::to_string(p->preperiod) + " period=" + std::to_string(p->period);
    if (const auto* t = std::get_if<Terminated>(&v)) return "verdict=terminated steps=" + std::to_string(t->steps);
    return "verdict=exhausted budget=" + std::to_string(std::get<Exhausted>(v).budget);
}

}  // namespace orbitkit::cycles
