#pragma once

#include <optional>
#include <string>

#include "jrpsched/online_engine.hpp"

namespace jrpsched::oracle {

// Threshold-policy invariants on a finished run. Returns a description of the
// first violation, or nullopt.
//  - after the i-th replenishment F_max = Ki and the running cost is 2Ki
//  - tau_1 = r_1 + K - 1, and tau_i - tau_{i-1} >= Ki for i >= 2
//  - the jobs started at tau_i finish by tau_{i+1}
inline std::optional<std::string> algorithm1_violation(const SimulationResult &run) {
    const Cost K = run.instance.replenishment_cost();
    const auto &events = run.trace.replenishments;
    if (events.empty()) return "no replenishment";
    Time prev_tau = run.instance.first_release() - 1;
    Time prev_end = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto idx = static_cast<Cost>(i + 1);
        const auto &e = events[i];
        const std::string at = "replenishment " + std::to_string(i + 1) + ": ";
        if (e.f_max_after != K * idx) return at + "F_max " + std::to_string(e.f_max_after);
        if (e.cost_after != 2 * K * idx) return at + "cost " + std::to_string(e.cost_after);
        const Time gap = e.time - prev_tau;
        if (i == 0 && gap != K) return at + "first replenishment at " + std::to_string(e.time);
        if (i > 0 && gap < K * idx) return at + "gap " + std::to_string(gap);
        if (i > 0 && e.time < prev_end) return at + "previous block still running";
        prev_tau = e.time;
        prev_end = e.time + static_cast<Time>(e.jobs);
    }
    if (run.cost.total != 2 * K * static_cast<Cost>(events.size())) return "final cost mismatch";
    return std::nullopt;
}

// tau_{i+1} - tau_i > tau_i - tau_{i-1} for every i >= 1 with tau_0 = 0.
// Returns the first index where it fails.
inline std::optional<std::string> gap_growth_violation(const SimulationResult &run) {
    Time prev_tau = 0;
    std::optional<Time> prev_gap;
    const auto &events = run.trace.replenishments;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Time gap = events[i].time - prev_tau;
        if (prev_gap && gap <= *prev_gap) {
            return "gap " + std::to_string(gap) + " after gap " + std::to_string(*prev_gap) + " at replenishment " +
                   std::to_string(i + 1);
        }
        prev_gap = gap;
        prev_tau = events[i].time;
    }
    return std::nullopt;
}

} // namespace jrpsched::oracle
