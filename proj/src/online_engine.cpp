#include "jrpsched/online_engine.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace jrpsched {

Time pending_fmax(std::span<const PendingJob> pending, Time t, Time machine_free_at) {
    const Time start = std::max(t, machine_free_at);
    Time out = 0;
    for (std::size_t k = 0; k < pending.size(); ++k) {
        out = std::max(out, start + static_cast<Time>(k) + 1 - pending[k].release);
    }
    return out;
}

std::string format_trace_line(const TraceEntry &entry) {
    std::ostringstream os;
    os << "t=" << entry.time << " action=" << (entry.action == ActionKind::wait ? "wait" : "replenish")
       << " pending=" << entry.pending << " fmax=" << entry.f_max_after;
    return os.str();
}

std::string format_trace(const Trace &trace) {
    std::string out;
    for (const auto &e : trace.entries) {
        out += format_trace_line(e);
        out += '\n';
    }
    return out;
}

SimulationResult simulate(ReleaseSource &source, Policy &policy, Cost K, const SimulationOptions &opts) {
    if (K < 1) {
        throw Error(ErrorCode::invalid_cost, "replenishment cost K must be >= 1");
    }
    std::vector<Time> releases;
    std::vector<Time> starts;
    std::vector<Time> replenishments;
    std::vector<PendingJob> pending;
    std::vector<std::size_t> flushed_jobs;
    std::vector<Time> flushed_starts;
    Trace trace;

    Time now = 0;
    Time machine_free = 0;
    Time f_max = 0;
    bool announced = false;
    Time pending_since = 0;

    auto deliver = [&] {
        for (auto a = source.peek(); a && a->release <= now; a = source.peek()) {
            if (announced) {
                throw Error(ErrorCode::protocol_violation, "release source delivered a job after the last one");
            }
            if (a->release < 0 || (!releases.empty() && a->release <= releases.back())) {
                throw Error(ErrorCode::input_order,
                            "release " + std::to_string(a->release) + " does not increase the release sequence",
                            releases.size());
            }
            if (pending.empty()) pending_since = now;
            pending.push_back({releases.size(), a->release});
            releases.push_back(a->release);
            starts.push_back(0);
            announced = a->last;
            source.pop();
        }
    };

    while (true) {
        deliver();
        if (pending.empty()) {
            if (source.exhausted()) break;
            const auto a = source.peek();
            if (!a) {
                throw Error(ErrorCode::protocol_violation, "release source stalled with no job pending");
            }
            now = a->release;
            continue;
        }
        if (opts.stall_limit && now - pending_since > *opts.stall_limit) {
            throw Error(ErrorCode::divergence, "policy '" + std::string(policy.name()) + "' waited past t=" +
                                                   std::to_string(now) + " without replenishing");
        }

        const PolicyObservation obs{now,   pending, machine_free, announced, f_max, replenishments.size()};
        const PolicyAction action = policy.decide(obs);

        if (action.kind == ActionKind::replenish_and_flush) {
            const Time start = std::max(now, machine_free);
            flushed_jobs.clear();
            flushed_starts.clear();
            for (std::size_t k = 0; k < pending.size(); ++k) {
                const Time s = checked_add(start, static_cast<Time>(k));
                starts[pending[k].index] = s;
                f_max = std::max(f_max, s + 1 - pending[k].release);
                flushed_jobs.push_back(pending[k].index);
                flushed_starts.push_back(s);
            }
            replenishments.push_back(now);
            machine_free = checked_add(start, static_cast<Time>(pending.size()));
            const Cost cost = checked_add(checked_mul(K, static_cast<Cost>(replenishments.size())), f_max);
            trace.entries.push_back({now, ActionKind::replenish_and_flush, pending.size(), f_max});
            trace.replenishments.push_back({now, pending.size(), f_max, cost});
            source.on_flush(now, flushed_jobs, flushed_starts);
            pending.clear();
            now = machine_free;
        } else {
            trace.entries.push_back({now, ActionKind::wait, pending.size(), f_max});
            Time next = checked_add(now, 1);
            if (opts.fast_forward) {
                if (action.wake_at) next = std::max(next, *action.wake_at);
                if (const auto a = source.peek()) next = std::min(next, std::max(now + 1, a->release));
                if (opts.stall_limit) next = std::min(next, pending_since + *opts.stall_limit + 1);
            }
            now = next;
        }
    }

    if (releases.empty()) {
        throw Error(ErrorCode::empty_instance, "release source produced no jobs");
    }
    Instance inst = validate_instance(std::move(releases), K);
    Solution sol{std::move(starts), std::move(replenishments)};
    CostBreakdown cost = evaluate(inst, sol);
    trace.solution = sol;
    return {std::move(inst), std::move(sol), std::move(trace), std::move(cost)};
}

SimulationResult simulate(const Instance &inst, Policy &policy, const SimulationOptions &opts) {
    FixedReleases source({inst.releases().begin(), inst.releases().end()});
    return simulate(source, policy, inst.replenishment_cost(), opts);
}

PolicyAction Algorithm1Policy::decide(const PolicyObservation &obs) {
    if (obs.pending.empty()) return PolicyAction::wait();
    const Time threshold = level_ + K_;
    const Time fu = pending_fmax(obs.pending, obs.now, obs.machine_free_at);
    if (fu >= threshold) {
        level_ = threshold;
        return PolicyAction::flush();
    }
    if (flush_on_last_ && obs.last_job_announced) {
        level_ = std::max(level_, fu);
        return PolicyAction::flush();
    }
    // fu grows by one per time unit once the machine is free, so the trigger
    // is exactly threshold - fu steps away.
    const Time start = std::max(obs.now, obs.machine_free_at);
    return PolicyAction::wait(start + (threshold - fu));
}

PolicyAction ImmediatePolicy::decide(const PolicyObservation &obs) {
    return obs.pending.empty() ? PolicyAction::wait() : PolicyAction::flush();
}

std::vector<std::string> policy_names() { return {"algorithm1", "algorithm1_flush_on_last", "immediate"}; }

std::unique_ptr<Policy> make_policy(std::string_view name, Cost K) {
    if (name == "algorithm1") return std::make_unique<Algorithm1Policy>(K);
    if (name == "algorithm1_flush_on_last") return std::make_unique<Algorithm1Policy>(K, true);
    if (name == "immediate") return std::make_unique<ImmediatePolicy>();
    throw Error(ErrorCode::invalid_argument, "unknown policy '" + std::string(name) + "'");
}

} // namespace jrpsched
