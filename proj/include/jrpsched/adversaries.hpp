#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jrpsched/core_model.hpp"
#include "jrpsched/online_engine.hpp"

namespace jrpsched {

struct GameOptions {
    // Time units a policy may wait with a job pending before the game is
    // aborted; defaults to 10K + 10.
    std::optional<Time> horizon;
};

struct GameReport {
    std::string game;
    std::string policy;
    Cost K = 0;
    std::vector<Time> releases;
    // Start times the adversary reacted to (t for two jobs; t1, t2 for three).
    std::vector<Time> observed_starts;
    Cost alg_cost = 0;
    Cost opt_cost = 0;     // brute force
    Cost formula_opt = 0;  // closed-form menu for this game
    double ratio = 0.0;    // alg_cost / opt_cost
    std::vector<std::string> transcript;

    bool formula_agrees() const noexcept { return formula_opt == opt_cost; }
};

/**
 * Two-job game: job 1 at time 0; once the policy starts it at t, job 2
 * arrives at t + 1 and is announced as the last one.
 *
 * OPT = min{2K + 1, K + t + 2} (replenish twice, or once at t + 1).
 */
GameReport two_job_game(Policy &policy, Cost K, const GameOptions &opts = {});

/**
 * Three-job game: job 1 at 0; after it starts at t1, job 2 arrives at
 * t1 + 1; after that starts at t2, job 3 arrives at t2 + 1 as the last job.
 *
 * OPT = min{K + t2 + 2, 2K + t1 + 2, 2K + t2 - t1 + 1, 3K + 1}, one entry
 * per way of splitting the three jobs into replenishment blocks.
 */
GameReport three_job_game(Policy &policy, Cost K, const GameOptions &opts = {});

Cost two_job_formula_opt(Cost K, Time t);
Cost three_job_formula_opt(Cost K, Time t1, Time t2);

// CSV columns for cmd_adversary.
std::string game_report_csv_header();
std::string game_report_csv_row(const GameReport &report);

} // namespace jrpsched
