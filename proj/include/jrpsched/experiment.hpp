#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jrpsched/generators.hpp"
#include "jrpsched/offline_solvers.hpp"
#include "jrpsched/parallel.hpp"

namespace jrpsched {

// How the offline optimum of each trial is obtained.
enum class OptChoice { automatic, brute_force, threshold_dp, greedy, closed_form };

std::string_view to_string(OptChoice choice);
OptChoice parse_opt_choice(std::string_view name);

struct ExperimentConfig {
    GenKind kind = GenKind::geometric;
    std::vector<double> betas;   // geometric
    std::vector<Time> ps;        // pregular, pbounded_uniform
    std::vector<std::int64_t> ns;
    std::vector<Cost> Ks{1};
    std::size_t replication = 100;
    std::uint64_t master_seed = 1;
    OptChoice opt = OptChoice::automatic;
    std::string policy = "algorithm1";
    bool timing = false;
};

struct ExperimentRecord {
    std::size_t instance_id = 0;
    GenKind kind = GenKind::geometric;
    std::int64_t n = 0;
    std::string p_or_beta;
    Cost K = 1;
    std::uint64_t seed = 0;
    Cost alg_cost = 0;
    std::size_t alg_q = 0;
    Cost opt_cost = 0;
    std::size_t opt_q = 0;
    std::string opt_method;
    double ratio = 0.0;
    // Set when the optimum is only bracketed: `opt_cost` is then a heuristic
    // upper bound, `ratio` = alg / upper and `ratio_upper` = alg / lower.
    std::optional<double> ratio_upper;
    std::optional<Cost> opt_lower;
    std::optional<double> runtime_ms;
};

struct CellSummary {
    GenKind kind;
    std::int64_t n;
    std::string p_or_beta;
    Cost K;
    std::size_t instances;
    double mean_ratio;
    double min_ratio;
    double max_ratio;
    std::optional<double> mean_ratio_upper;
};

/// Throws before any trial runs if the grid or solver choice cannot work.
void validate_config(const ExperimentConfig &config);

/// One record per trial, in instance_id order. Trial i uses seed
/// derive_seed(master_seed, i); results do not depend on `execution` or
/// `workers`.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig &config, Execution execution = Execution::serial,
                                             int workers = 0);

struct TrialSpec {
    std::size_t instance_id = 0;
    GenKind kind = GenKind::geometric;
    std::int64_t n = 1;
    double beta = 0.5;
    Time p = 1;
    Cost K = 1;
    std::uint64_t seed = 0;
};

/// Expands the grid into trials: cells in (K, parameter, n) order, each
/// repeated `replication` times.
std::vector<TrialSpec> expand_trials(const ExperimentConfig &config);

/// Runs a single trial: generate, simulate the policy, solve offline.
ExperimentRecord run_trial(const TrialSpec &trial, const ExperimentConfig &config);

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord> &records);

inline constexpr std::string_view kExperimentCsvHeader =
    "instance_id,kind,n,p_or_beta,K,seed,alg_cost,alg_q,opt_cost,opt_q,opt_method,ratio,runtime_ms";

std::string format_record(const ExperimentRecord &record);
void write_csv(std::ostream &out, const std::vector<ExperimentRecord> &records);

inline constexpr std::string_view kSummaryCsvHeader =
    "kind,n,p_or_beta,K,instances,mean_ratio,min_ratio,max_ratio,mean_ratio_upper";

void write_summary(std::ostream &out, const std::vector<CellSummary> &cells);

} // namespace jrpsched
