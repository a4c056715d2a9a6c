#include "jrpsched/offline_solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace jrpsched {

std::string_view to_string(OptMethod method) {
    switch (method) {
    case OptMethod::brute_force: return "brute_force";
    case OptMethod::threshold_dp: return "threshold_dp";
    case OptMethod::greedy_heuristic: return "greedy_heuristic";
    case OptMethod::closed_form: return "closed_form";
    }
    return "unknown";
}

namespace {

constexpr Time kNoMachine = std::numeric_limits<Time>::min();

// Cost of the ASAP schedule for a replenishment set that contains the last
// release. Mirrors asap_schedule() without materialising the solution.
Time asap_fmax(std::span<const Time> releases, std::span<const Time> Q) {
    Time free = kNoMachine;
    Time fmax = 0;
    std::size_t qi = 0;
    for (Time r : releases) {
        while (Q[qi] < r) ++qi;
        const Time start = std::max(free, Q[qi]);
        fmax = std::max(fmax, start + 1 - r);
        free = start + 1;
    }
    return fmax;
}

OptResult finish(const Instance &inst, std::vector<Time> Q, OptMethod method) {
    OptResult out;
    out.solution = asap_schedule(inst, Q);
    out.cost = evaluate(inst, out.solution).total;
    out.q = Q.size();
    out.method = method;
    return out;
}

// Sorted distinct values r_k - r_j + 1 (j <= k) that do not exceed `limit`.
std::vector<Time> candidate_bounds(std::span<const Time> releases, Time limit) {
    std::vector<Time> out;
    for (std::size_t j = 0; j < releases.size(); ++j) {
        for (std::size_t k = j; k < releases.size(); ++k) {
            const Time F = releases[k] - releases[j] + 1;
            if (F > limit) break;
            out.push_back(F);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct GreedyPass {
    std::vector<std::size_t> block_ends;
    Time f_max = 0;
};

// Each block starts at the first uncovered job i and extends to the last job
// released no later than r_i + F - 1.
std::optional<GreedyPass> greedy_pass(std::span<const Time> releases, Time F) {
    GreedyPass pass;
    const std::size_t n = releases.size();
    Time free = kNoMachine;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n;) {
        k = std::max(k, i);
        while (k + 1 < n && releases[k + 1] <= releases[i] + F - 1) ++k;
        const Time start = std::max(free, releases[k]);
        const Time flow = start + 1 - releases[i];
        if (flow > F) return std::nullopt;
        pass.f_max = std::max(pass.f_max, flow);
        free = start + static_cast<Time>(k - i + 1);
        pass.block_ends.push_back(k);
        i = k + 1;
    }
    return pass;
}

std::vector<Time> replenish_at_block_ends(std::span<const Time> releases, std::span<const std::size_t> ends) {
    std::vector<Time> Q;
    Q.reserve(ends.size());
    for (std::size_t e : ends) Q.push_back(releases[e]);
    return Q;
}

// Pareto-optimal (blocks, machine free time) pairs reaching a given first
// uncovered job, with back-pointers for reconstruction.
struct FrontierEntry {
    std::size_t blocks;
    Time free;
    std::size_t parent_job;
    std::size_t parent_entry;
};

using Frontier = std::vector<FrontierEntry>;

void insert_pareto(Frontier &frontier, const FrontierEntry &e) {
    for (const auto &x : frontier) {
        if (x.blocks <= e.blocks && x.free <= e.free) return;
    }
    std::erase_if(frontier, [&](const FrontierEntry &x) { return x.blocks >= e.blocks && x.free >= e.free; });
    frontier.push_back(e);
}

struct BlockDp {
    std::vector<Frontier> frontiers; // index n holds completed partitions
};

BlockDp run_block_dp(std::span<const Time> releases, Time F) {
    const std::size_t n = releases.size();
    BlockDp dp;
    dp.frontiers.resize(n + 1);
    dp.frontiers[0].push_back({0, releases[0], 0, 0});
    for (std::size_t i = 0; i < n; ++i) {
        const Frontier &here = dp.frontiers[i];
        for (std::size_t e = 0; e < here.size(); ++e) {
            const Time free = here[e].free; // already >= r_i
            if (free + 1 - releases[i] > F) continue;
            for (std::size_t k = i; k < n && releases[k] <= releases[i] + F - 1; ++k) {
                const Time start = std::max(free, releases[k]);
                Time next_free = start + static_cast<Time>(k - i + 1);
                if (k + 1 < n) next_free = std::max(next_free, releases[k + 1]);
                else next_free = 0; // terminal: only the block count matters
                insert_pareto(dp.frontiers[k + 1], {here[e].blocks + 1, next_free, i, e});
            }
        }
    }
    return dp;
}

std::optional<std::size_t> min_blocks(const BlockDp &dp) {
    const Frontier &done = dp.frontiers.back();
    if (done.empty()) return std::nullopt;
    std::size_t best = done.front().blocks;
    for (const auto &x : done) best = std::min(best, x.blocks);
    return best;
}

std::vector<std::size_t> reconstruct_block_ends(const BlockDp &dp) {
    const Frontier &done = dp.frontiers.back();
    std::size_t entry = 0;
    for (std::size_t e = 1; e < done.size(); ++e) {
        if (done[e].blocks < done[entry].blocks) entry = e;
    }
    std::vector<std::size_t> ends;
    std::size_t job = dp.frontiers.size() - 1;
    while (job > 0) {
        const FrontierEntry &x = dp.frontiers[job][entry];
        ends.push_back(job - 1);
        job = x.parent_job;
        entry = x.parent_entry;
    }
    std::reverse(ends.begin(), ends.end());
    return ends;
}

struct Candidate {
    Cost cost;
    std::size_t q;
    Time F;
};

bool better(const Candidate &a, const Candidate &b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.q != b.q) return a.q < b.q;
    return a.F < b.F;
}

} // namespace

OptResult brute_force_opt(const Instance &inst, const BruteForceOptions &opts) {
    const std::size_t n = inst.size();
    if (n > opts.max_jobs) {
        throw Error(ErrorCode::size_cap_exceeded, "brute force refuses " + std::to_string(n) +
                                                      " jobs (cap " + std::to_string(opts.max_jobs) + ")");
    }
    const auto releases = inst.releases();
    const Cost K = inst.replenishment_cost();

    std::vector<Time> best_Q;
    Cost best_cost = 0;
    bool found = false;
    std::vector<Time> Q;
    Q.reserve(n);

    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const std::size_t q = static_cast<std::size_t>(std::popcount(mask)) + 1;
        if (opts.exact_q && q != *opts.exact_q) continue;
        Q.clear();
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (mask >> j & 1U) Q.push_back(releases[j]);
        }
        Q.push_back(releases[n - 1]);
        const Cost cost = checked_add(checked_mul(K, static_cast<Cost>(q)), asap_fmax(releases, Q));
        if (!found || cost < best_cost || (cost == best_cost && Q.size() < best_Q.size()) ||
            (cost == best_cost && Q.size() == best_Q.size() && Q < best_Q)) {
            best_cost = cost;
            best_Q = Q;
            found = true;
        }
    }
    if (!found) {
        throw Error(ErrorCode::infeasible_replenishments, "no replenishment set of the requested size");
    }
    return finish(inst, std::move(best_Q), OptMethod::brute_force);
}

std::optional<std::size_t> min_blocks_for_flow_bound(const Instance &inst, Time F) {
    if (F < 1) return std::nullopt;
    return min_blocks(run_block_dp(inst.releases(), F));
}

OptResult threshold_dp_opt(const Instance &inst, const ThresholdDpOptions &opts) {
    const std::size_t n = inst.size();
    if (n > opts.max_jobs) {
        throw Error(ErrorCode::size_cap_exceeded, "threshold DP refuses " + std::to_string(n) +
                                                      " jobs (cap " + std::to_string(opts.max_jobs) + ")");
    }
    const auto releases = inst.releases();
    const Cost K = inst.replenishment_cost();

    // One block replenished at the last release is always feasible.
    const Time span_bound = inst.last_release() - inst.first_release() + 1;
    Candidate best{checked_add(K, span_bound), 1, span_bound};
    const auto candidates = candidate_bounds(releases, best.cost - K);

    auto evaluate_bound = [&](Time F) -> std::optional<Candidate> {
        const auto q = min_blocks(run_block_dp(releases, F));
        if (!q) return std::nullopt;
        return Candidate{checked_add(checked_mul(K, static_cast<Cost>(*q)), F), *q, F};
    };

    if (opts.execution == Execution::serial) {
        for (Time F : candidates) {
            // blocks(F) >= 1, so no larger bound can beat the incumbent
            if (K + F > best.cost) break;
            if (auto c = evaluate_bound(F); c && better(*c, best)) best = *c;
        }
    } else {
        // Batches in ascending F; a batch is evaluated in parallel and merged
        // in order, so the stopping point and the winner match the serial sweep.
        const std::size_t batch = 4 * static_cast<std::size_t>(max_workers());
        std::vector<std::optional<Candidate>> results(batch);
        for (std::size_t lo = 0; lo < candidates.size(); lo += batch) {
            if (K + candidates[lo] > best.cost) break;
            const std::size_t hi = std::min(candidates.size(), lo + batch);
            const auto count = static_cast<std::int64_t>(hi - lo);
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t c = 0; c < count; ++c) {
                const Time F = candidates[lo + static_cast<std::size_t>(c)];
                results[static_cast<std::size_t>(c)] = K + F > best.cost ? std::nullopt : evaluate_bound(F);
            }
            for (std::size_t c = 0; c < hi - lo; ++c) {
                if (results[c] && better(*results[c], best)) best = *results[c];
            }
        }
    }

    const auto ends = reconstruct_block_ends(run_block_dp(releases, best.F));
    OptResult out = finish(inst, replenish_at_block_ends(releases, ends), OptMethod::threshold_dp);
    if (out.cost > best.cost) {
        throw Error(ErrorCode::protocol_violation, "threshold DP reconstruction exceeds its own bound");
    }
    return out;
}

OptResult block_partition_greedy(const Instance &inst) {
    const auto releases = inst.releases();
    const Cost K = inst.replenishment_cost();
    const Time span_bound = inst.last_release() - inst.first_release() + 1;

    // Seed the incumbent with a doubling sweep so the candidate set stays small.
    std::optional<GreedyPass> best_pass;
    Cost best_cost = std::numeric_limits<Cost>::max();
    auto consider = [&](Time F) {
        auto pass = greedy_pass(releases, F);
        if (!pass) return;
        const Cost cost = checked_add(checked_mul(K, static_cast<Cost>(pass->block_ends.size())), pass->f_max);
        if (cost < best_cost || (cost == best_cost && pass->block_ends.size() < best_pass->block_ends.size())) {
            best_cost = cost;
            best_pass = std::move(pass);
        }
    };
    for (Time F = 1; F < span_bound; F *= 2) consider(F);
    consider(span_bound);

    for (Time F : candidate_bounds(releases, best_cost - K)) {
        // Stops where even a single block at this bound could not win; a pass
        // whose realised flow undercuts F may be skipped, which is acceptable
        // for an upper bound.
        if (K + F > best_cost) break;
        consider(F);
    }
    return finish(inst, replenish_at_block_ends(releases, best_pass->block_ends), OptMethod::greedy_heuristic);
}

PRegularOpt pregular_opt(std::int64_t n, Time p, Cost K) {
    if (n < 1 || p < 1 || K < 1) {
        throw Error(ErrorCode::invalid_argument, "pregular_opt needs n, p, K >= 1");
    }
    PRegularOpt best{pregular_cost_with_q(n, p, K, 1), 1};
    for (std::int64_t q = 2; q <= n; ++q) {
        const Cost c = pregular_cost_with_q(n, p, K, q);
        if (c < best.cost) best = {c, q};
    }
    return best;
}

Cost pregular_cost_with_q(std::int64_t n, Time p, Cost K, std::int64_t q) {
    if (n < 1 || p < 1 || K < 1 || q < 1 || q > n) {
        throw Error(ErrorCode::invalid_argument, "pregular_cost_with_q needs 1 <= q <= n and p, K >= 1");
    }
    const std::int64_t per_block = (n + q - 1) / q;
    return checked_add(checked_add(checked_mul(q, K), checked_mul(per_block - 1, p)), 1);
}

Solution pregular_witness(std::int64_t n, Time p, Cost K, std::int64_t q) {
    pregular_cost_with_q(n, p, K, q); // argument validation
    std::vector<Time> releases(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) releases[static_cast<std::size_t>(j)] = checked_mul(j, p);
    const Instance inst = validate_instance(releases, K);

    const std::int64_t small = n / q;
    const std::int64_t large_blocks = n - q * small;
    std::vector<Time> Q;
    std::int64_t last = -1;
    for (std::int64_t b = 0; b < q; ++b) {
        last += b < large_blocks ? small + 1 : small;
        Q.push_back(releases[static_cast<std::size_t>(last)]);
    }
    return asap_schedule(inst, Q);
}

PRegularBounds pregular_bounds(std::int64_t n, Time p, Cost K) {
    if (n < 1 || p < 1 || K < 1) {
        throw Error(ErrorCode::invalid_argument, "pregular_bounds needs n, p, K >= 1");
    }
    const double root = 2.0 * std::sqrt(static_cast<double>(n) * static_cast<double>(p) * static_cast<double>(K));
    return {root - static_cast<double>(p) + 1.0, root + static_cast<double>(K) + 1.0};
}

} // namespace jrpsched
