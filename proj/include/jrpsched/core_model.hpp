#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jrpsched/error.hpp"

namespace jrpsched {

using Time = std::int64_t;
using Cost = std::int64_t;

/**
 * A set of unit jobs with distinct integer release dates, served by a single
 * resource whose every replenishment costs K.
 *
 * Only constructible through validate_instance(), so a live Instance always
 * has at least one job, strictly increasing non-negative releases and K >= 1.
 */
class Instance {
public:
    std::span<const Time> releases() const noexcept { return releases_; }
    Time release(std::size_t job) const { return releases_.at(job); }
    Cost replenishment_cost() const noexcept { return K_; }
    std::size_t size() const noexcept { return releases_.size(); }

    Time first_release() const noexcept { return releases_.front(); }
    Time last_release() const noexcept { return releases_.back(); }

    friend bool operator==(const Instance &, const Instance &) = default;

private:
    Instance(std::vector<Time> releases, Cost K) : releases_(std::move(releases)), K_(K) {}
    friend Instance validate_instance(std::vector<Time> releases, Cost K);

    std::vector<Time> releases_;
    Cost K_;
};

// Throws Error with empty_instance / negative_release / duplicate_release /
// non_increasing_release / invalid_cost.
Instance validate_instance(std::vector<Time> releases, Cost K);

// Start time per job (indexed like Instance::releases()) and the strictly
// increasing replenishment times. Completion times are starts + 1.
struct Solution {
    std::vector<Time> starts;
    std::vector<Time> replenishments;

    friend bool operator==(const Solution &, const Solution &) = default;
};

struct CostBreakdown {
    std::vector<Time> flow_times;
    Time f_max = 0;
    std::size_t repl_count = 0;
    Cost total = 0;
};

/// Schedules jobs in release order, each at the earliest time that is at or
/// after the previous completion and at or after the first replenishment not
/// earlier than its release. Throws infeasible_replenishments if some job has
/// no replenishment at or after its release.
Solution asap_schedule(const Instance &inst, std::span<const Time> replenishments);

/// Cost of a feasible solution. Throws (with the offending job index) on
/// start-before-release, uncovered job or overlap.
CostBreakdown evaluate(const Instance &inst, const Solution &sol);

struct GeneralJob {
    Time release;
    Time processing_time;

    friend bool operator==(const GeneralJob &, const GeneralJob &) = default;
};

struct GeneralInstance {
    std::vector<GeneralJob> jobs;

    friend bool operator==(const GeneralInstance &, const GeneralInstance &) = default;
};

// Unit jobs sharing a release date collapse into one job whose processing
// time is the group size; to_unit expands them back.
GeneralInstance to_general(std::span<const Time> releases);
std::vector<Time> to_unit(const GeneralInstance &general);

struct BracketedInputs {
    Instance dense;          // every integer time from first to last release
    Instance sparse_regular; // first release, then every p time units up to the last release
};

BracketedInputs bracket_inputs(const Instance &inst, Time p);

// Input class predicates.
bool is_p_bounded(std::span<const Time> releases, Time p);
bool is_p_regular(std::span<const Time> releases, Time p);
bool is_sparse(std::span<const Time> releases, Cost K);

} // namespace jrpsched
