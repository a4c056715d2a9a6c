#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jrpsched/core_model.hpp"

namespace jrpsched {

struct PendingJob {
    std::size_t index;
    Time release;
};

// What a policy sees at an integer decision time. `pending` is valid only
// for the duration of the decide() call.
struct PolicyObservation {
    Time now = 0;
    std::span<const PendingJob> pending;
    Time machine_free_at = 0;
    bool last_job_announced = false;
    Time f_max_so_far = 0;
    std::size_t repl_count_so_far = 0;
};

enum class ActionKind { wait, replenish_and_flush };

struct PolicyAction {
    ActionKind kind = ActionKind::wait;
    // For Wait only: the policy will keep waiting, whatever the clock says,
    // until this time unless a new job arrives first. The engine may use it
    // to skip steps when fast-forwarding is enabled.
    std::optional<Time> wake_at;

    static PolicyAction wait(std::optional<Time> wake_at = std::nullopt) { return {ActionKind::wait, wake_at}; }
    static PolicyAction flush() { return {ActionKind::replenish_and_flush, std::nullopt}; }
};

class Policy {
public:
    virtual ~Policy() = default;
    virtual PolicyAction decide(const PolicyObservation &obs) = 0;
    virtual std::string_view name() const = 0;
};

/// Maximum flow time of the pending jobs if they ran back-to-back in release
/// order from max(t, machine_free_at); 0 when nothing is pending.
Time pending_fmax(std::span<const PendingJob> pending, Time t, Time machine_free_at);

struct Arrival {
    Time release;
    bool last;
};

/// Online job stream. The engine consumes arrivals in order and tells the
/// source about every flush, so adaptive sources can pick future releases.
class ReleaseSource {
public:
    virtual ~ReleaseSource() = default;
    // Next undelivered arrival, or nullopt if it is not decided yet.
    virtual std::optional<Arrival> peek() const = 0;
    virtual void pop() = 0;
    virtual bool exhausted() const = 0;
    virtual void on_flush(Time /*replenished_at*/, std::span<const std::size_t> /*jobs*/,
                          std::span<const Time> /*starts*/) {}
};

/// Replays a fixed release list; the final element carries the last-job flag.
class FixedReleases final : public ReleaseSource {
public:
    explicit FixedReleases(std::vector<Time> releases) : releases_(std::move(releases)) {}

    std::optional<Arrival> peek() const override {
        if (exhausted()) return std::nullopt;
        return Arrival{releases_[next_], next_ + 1 == releases_.size()};
    }
    void pop() override { ++next_; }
    bool exhausted() const override { return next_ >= releases_.size(); }

private:
    std::vector<Time> releases_;
    std::size_t next_ = 0;
};

struct TraceEntry {
    Time time;
    ActionKind action;
    std::size_t pending;
    Time f_max_after;
};

struct ReplenishmentEvent {
    Time time;
    std::size_t jobs;
    Time f_max_after;
    Cost cost_after;
};

struct Trace {
    std::vector<TraceEntry> entries;
    std::vector<ReplenishmentEvent> replenishments;
    Solution solution;
};

// `t=<int> action=<wait|replenish> pending=<int> fmax=<int>` per entry.
std::string format_trace_line(const TraceEntry &entry);
std::string format_trace(const Trace &trace);

struct SimulationOptions {
    // Jump straight to the next arrival or the policy's wake time instead of
    // stepping one time unit at a time. Decisions are unchanged; the trace
    // only lists the steps actually observed.
    bool fast_forward = false;
    // Abort with a divergence error after this many consecutive time units
    // of waiting with jobs pending.
    std::optional<Time> stall_limit;
};

struct SimulationResult {
    Instance instance;
    Solution solution;
    Trace trace;
    CostBreakdown cost;
};

/**
 * Runs `policy` against `source` on the integer clock.
 *
 * At each step every arrival with release <= now joins the pending set and
 * the policy is asked for an action. A flush replenishes at `now`, starts all
 * pending jobs back-to-back from max(now, machine_free_at) and advances the
 * clock to the end of that block. Decisions are never revisited. The run
 * ends when the source is exhausted and nothing is pending.
 *
 * Throws protocol_violation (flush with nothing pending, stalled source),
 * input_order (non-increasing releases) and divergence (stall limit).
 */
SimulationResult simulate(ReleaseSource &source, Policy &policy, Cost K, const SimulationOptions &opts = {});
SimulationResult simulate(const Instance &inst, Policy &policy, const SimulationOptions &opts = {});

/// The threshold rule: flush once the pending jobs' maximum flow time reaches
/// the current level F_max + K, then raise the level by K. With
/// `flush_on_last` it also flushes as soon as the last job is announced.
class Algorithm1Policy final : public Policy {
public:
    explicit Algorithm1Policy(Cost K, bool flush_on_last = false) : K_(K), flush_on_last_(flush_on_last) {}

    PolicyAction decide(const PolicyObservation &obs) override;
    std::string_view name() const override { return flush_on_last_ ? "algorithm1_flush_on_last" : "algorithm1"; }

    Time level() const noexcept { return level_; }

private:
    Cost K_;
    bool flush_on_last_;
    Time level_ = 0;
};

// Baseline: replenishes as soon as anything is pending.
class ImmediatePolicy final : public Policy {
public:
    PolicyAction decide(const PolicyObservation &obs) override;
    std::string_view name() const override { return "immediate"; }
};

// "algorithm1", "algorithm1_flush_on_last", "immediate".
std::unique_ptr<Policy> make_policy(std::string_view name, Cost K);
std::vector<std::string> policy_names();

} // namespace jrpsched
