#include "jrpsched/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace jrpsched {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::empty_instance: return "empty_instance";
    case ErrorCode::duplicate_release: return "duplicate_release";
    case ErrorCode::non_increasing_release: return "non_increasing_release";
    case ErrorCode::negative_release: return "negative_release";
    case ErrorCode::invalid_cost: return "invalid_cost";
    case ErrorCode::infeasible_replenishments: return "infeasible_replenishments";
    case ErrorCode::overlap: return "overlap";
    case ErrorCode::start_before_release: return "start_before_release";
    case ErrorCode::uncovered_job: return "uncovered_job";
    case ErrorCode::malformed_solution: return "malformed_solution";
    case ErrorCode::not_p_bounded: return "not_p_bounded";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::size_cap_exceeded: return "size_cap_exceeded";
    case ErrorCode::protocol_violation: return "protocol_violation";
    case ErrorCode::input_order: return "input_order";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::parse_error: return "parse_error";
    }
    return "unknown";
}

Instance validate_instance(std::vector<Time> releases, Cost K) {
    if (releases.empty()) {
        throw Error(ErrorCode::empty_instance, "instance has no jobs");
    }
    if (K < 1) {
        throw Error(ErrorCode::invalid_cost, "replenishment cost K must be >= 1, got " + std::to_string(K));
    }
    for (std::size_t j = 0; j < releases.size(); ++j) {
        if (releases[j] < 0) {
            throw Error(ErrorCode::negative_release,
                        "job " + std::to_string(j) + " has negative release " + std::to_string(releases[j]), j);
        }
        if (j == 0) continue;
        if (releases[j] == releases[j - 1]) {
            throw Error(ErrorCode::duplicate_release,
                        "jobs " + std::to_string(j - 1) + " and " + std::to_string(j) + " share release " +
                            std::to_string(releases[j]),
                        j);
        }
        if (releases[j] < releases[j - 1]) {
            throw Error(ErrorCode::non_increasing_release,
                        "release of job " + std::to_string(j) + " is smaller than its predecessor's", j);
        }
    }
    return Instance(std::move(releases), K);
}

Solution asap_schedule(const Instance &inst, std::span<const Time> replenishments) {
    for (std::size_t i = 1; i < replenishments.size(); ++i) {
        if (replenishments[i] <= replenishments[i - 1]) {
            throw Error(ErrorCode::malformed_solution, "replenishment times must be strictly increasing");
        }
    }
    const auto releases = inst.releases();
    Solution sol;
    sol.starts.reserve(releases.size());
    sol.replenishments.assign(replenishments.begin(), replenishments.end());

    auto next_repl = replenishments.begin();
    bool machine_used = false;
    Time machine_free = 0;
    for (std::size_t j = 0; j < releases.size(); ++j) {
        next_repl = std::lower_bound(next_repl, replenishments.end(), releases[j]);
        if (next_repl == replenishments.end()) {
            throw Error(ErrorCode::infeasible_replenishments,
                        "no replenishment at or after the release of job " + std::to_string(j), j);
        }
        const Time start = machine_used ? std::max(machine_free, *next_repl) : *next_repl;
        sol.starts.push_back(start);
        machine_free = checked_add(start, 1);
        machine_used = true;
    }
    return sol;
}

CostBreakdown evaluate(const Instance &inst, const Solution &sol) {
    const auto releases = inst.releases();
    const auto &Q = sol.replenishments;
    if (sol.starts.size() != releases.size()) {
        throw Error(ErrorCode::malformed_solution, "solution has " + std::to_string(sol.starts.size()) +
                                                       " start times for " + std::to_string(releases.size()) +
                                                       " jobs");
    }
    for (std::size_t i = 1; i < Q.size(); ++i) {
        if (Q[i] <= Q[i - 1]) {
            throw Error(ErrorCode::malformed_solution, "replenishment times must be strictly increasing");
        }
    }

    CostBreakdown out;
    out.flow_times.reserve(releases.size());
    for (std::size_t j = 0; j < releases.size(); ++j) {
        const Time s = sol.starts[j];
        if (s < releases[j]) {
            throw Error(ErrorCode::start_before_release, "job " + std::to_string(j) + " starts before its release",
                        j);
        }
        // some tau in Q with r_j <= tau <= S_j
        auto it = std::lower_bound(Q.begin(), Q.end(), releases[j]);
        if (it == Q.end() || *it > s) {
            throw Error(ErrorCode::uncovered_job,
                        "no replenishment between release and start of job " + std::to_string(j), j);
        }
        const Time flow = checked_add(checked_add(s, 1), -releases[j]);
        out.flow_times.push_back(flow);
        out.f_max = std::max(out.f_max, flow);
    }

    std::vector<std::size_t> order(releases.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sol.starts[a] != sol.starts[b] ? sol.starts[a] < sol.starts[b] : a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (sol.starts[order[i]] - sol.starts[order[i - 1]] < 1) {
            throw Error(ErrorCode::overlap,
                        "job " + std::to_string(order[i]) + " overlaps job " + std::to_string(order[i - 1]),
                        order[i]);
        }
    }

    out.repl_count = Q.size();
    out.total = checked_add(checked_mul(inst.replenishment_cost(), static_cast<Cost>(Q.size())), out.f_max);
    return out;
}

GeneralInstance to_general(std::span<const Time> releases) {
    GeneralInstance out;
    for (std::size_t j = 0; j < releases.size(); ++j) {
        if (j > 0 && releases[j] < releases[j - 1]) {
            throw Error(ErrorCode::non_increasing_release, "release multiset must be given in non-decreasing order",
                        j);
        }
        if (!out.jobs.empty() && out.jobs.back().release == releases[j]) {
            ++out.jobs.back().processing_time;
        } else {
            out.jobs.push_back({releases[j], 1});
        }
    }
    return out;
}

std::vector<Time> to_unit(const GeneralInstance &general) {
    std::vector<Time> out;
    for (const auto &job : general.jobs) {
        out.insert(out.end(), static_cast<std::size_t>(job.processing_time), job.release);
    }
    return out;
}

BracketedInputs bracket_inputs(const Instance &inst, Time p) {
    if (p < 1) {
        throw Error(ErrorCode::invalid_argument, "bound p must be >= 1");
    }
    const auto releases = inst.releases();
    for (std::size_t j = 1; j < releases.size(); ++j) {
        const Time gap = releases[j] - releases[j - 1];
        if (gap > p) {
            throw Error(ErrorCode::not_p_bounded,
                        "gap " + std::to_string(gap) + " between jobs " + std::to_string(j - 1) + " and " +
                            std::to_string(j) + " exceeds p = " + std::to_string(p),
                        j);
        }
    }
    const Time t_min = inst.first_release();
    const Time t_max = inst.last_release();

    std::vector<Time> dense(static_cast<std::size_t>(t_max - t_min + 1));
    std::iota(dense.begin(), dense.end(), t_min);

    std::vector<Time> regular;
    for (Time t = t_min; t <= t_max; t += p) {
        regular.push_back(t);
    }
    const Cost K = inst.replenishment_cost();
    return {validate_instance(std::move(dense), K), validate_instance(std::move(regular), K)};
}

bool is_p_bounded(std::span<const Time> releases, Time p) {
    for (std::size_t j = 1; j < releases.size(); ++j) {
        if (releases[j] - releases[j - 1] > p) return false;
    }
    return true;
}

bool is_p_regular(std::span<const Time> releases, Time p) {
    for (std::size_t j = 1; j < releases.size(); ++j) {
        if (releases[j] - releases[j - 1] != p) return false;
    }
    return true;
}

bool is_sparse(std::span<const Time> releases, Cost K) {
    // 1-based job j needs r_{j+1} - r_j >= K j
    for (std::size_t j = 1; j < releases.size(); ++j) {
        if (releases[j] - releases[j - 1] < K * static_cast<Cost>(j)) return false;
    }
    return true;
}

} // namespace jrpsched
