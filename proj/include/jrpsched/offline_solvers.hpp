#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "jrpsched/core_model.hpp"
#include "jrpsched/parallel.hpp"

namespace jrpsched {

enum class OptMethod { brute_force, threshold_dp, greedy_heuristic, closed_form };

std::string_view to_string(OptMethod method);

struct OptResult {
    Cost cost = 0;
    Solution solution;
    std::size_t q = 0;
    OptMethod method = OptMethod::brute_force;
};

inline constexpr std::size_t kBruteForceCap = 16;
inline constexpr std::size_t kThresholdDpCap = 2000;

struct BruteForceOptions {
    std::size_t max_jobs = kBruteForceCap;
    // Restrict the search to replenishment sets of exactly this size.
    std::optional<std::size_t> exact_q;
};

/// Exhaustive search over replenishment sets drawn from the release dates
/// (the last release is always included), each scheduled ASAP. Ties go to
/// fewer replenishments, then the lexicographically earliest set.
/// Throws size_cap_exceeded above `max_jobs`; with `exact_q` set and no
/// feasible set of that size, throws infeasible_replenishments.
OptResult brute_force_opt(const Instance &inst, const BruteForceOptions &opts = {});

struct ThresholdDpOptions {
    std::size_t max_jobs = kThresholdDpCap;
    Execution execution = Execution::serial;
};

/// Exact optimum without enumeration.
///
/// An optimal solution splits the release-ordered jobs into consecutive
/// blocks, each replenished at its last release and scheduled ASAP. The
/// maximum flow time is r_k - r_j + 1 for some j <= k. For each such
/// candidate bound F, a forward pass over block boundaries computes the
/// fewest blocks that keep every flow time <= F, keeping per
/// first-uncovered job the Pareto frontier of (blocks used, machine free
/// time). The answer is min over F of K * blocks(F) + F.
///
/// Execution::openmp evaluates the candidate bounds concurrently and reduces
/// with the same tie-break as the serial sweep.
OptResult threshold_dp_opt(const Instance &inst, const ThresholdDpOptions &opts = {});

/// Fewest blocks keeping all flow times <= F, or nullopt if impossible.
/// Exposed for testing and benchmarking.
std::optional<std::size_t> min_blocks_for_flow_bound(const Instance &inst, Time F);

/// Heuristic upper bound: for each candidate bound F, grow every block as far
/// as flows stay <= F. Never below the exact optimum.
OptResult block_partition_greedy(const Instance &inst);

// Closed forms for the p-regular input R_n with releases 0, p, ..., (n-1)p.

struct PRegularOpt {
    Cost cost;
    std::int64_t q_star;
};

/// min over q of Kq + (ceil(n/q) - 1)p + 1, smallest minimising q.
PRegularOpt pregular_opt(std::int64_t n, Time p, Cost K);

/// Cheapest cost on R_n with exactly q replenishments.
Cost pregular_cost_with_q(std::int64_t n, Time p, Cost K, std::int64_t q);

/// A solution for R_n with q replenishments whose cost is
/// pregular_cost_with_q(n, p, K, q).
///
/// With n = q*floor(n/q) + r, the jobs form r blocks of ceil(n/q) followed by
/// q - r blocks of floor(n/q); each block is replenished at its last release
/// and scheduled ASAP. The closed-form replenishment times
/// tau_i = i*p*ceil(n/q) (i <= r), i*p*floor(n/q) (i > r) are not used: they
/// repeat a time for n = 5, q = 4 and overshoot the cost for n = 7, q = 3,
/// p = 1.
Solution pregular_witness(std::int64_t n, Time p, Cost K, std::int64_t q);

struct PRegularBounds {
    double lower; // 2 sqrt(npK) - p + 1
    double upper; // 2 sqrt(npK) + K + 1
};

PRegularBounds pregular_bounds(std::int64_t n, Time p, Cost K);

} // namespace jrpsched
