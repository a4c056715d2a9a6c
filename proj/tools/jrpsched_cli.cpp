// Command-line harness: generate instances, simulate online policies, solve
// offline, play the adversary games and run the randomized experiment.
//
// Exit codes: 0 success, 1 usage, 2 infeasible input, 3 solver cap refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jrpsched/adversaries.hpp"
#include "jrpsched/experiment.hpp"
#include "jrpsched/format.hpp"
#include "jrpsched/generators.hpp"
#include "jrpsched/io.hpp"
#include "jrpsched/offline_solvers.hpp"
#include "jrpsched/online_engine.hpp"

namespace {

using namespace jrpsched;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCap = 3;

// Unknown names are usage errors; everything else the library rejects is
// infeasible input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "1,2,5" or "1..50" or a mix: "1..3,10".
std::vector<std::int64_t> parse_int_grid(const std::string &text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoll(item));
            } else {
                const auto lo = std::stoll(item.substr(0, dots));
                const auto hi = std::stoll(item.substr(dots + 2));
                for (auto v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error &) {
            throw UsageError("bad integer list '" + text + "'");
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_real_list(const std::string &text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stod(text.substr(pos, comma - pos)));
        } catch (const std::logic_error &) {
            throw UsageError("bad number list '" + text + "'");
        }
        pos = comma + 1;
    }
    return out;
}

GenKind kind_or_usage(const std::string &name) {
    try {
        return parse_gen_kind(name);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

std::unique_ptr<Policy> policy_or_usage(const std::string &name, Cost K) {
    try {
        return make_policy(name, K);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

struct GeneratorArgs {
    std::string kind;
    std::int64_t n = 0;
    Time p = 1;
    Cost K = 1;
    double beta = 0.5;
    std::uint64_t seed = 1;
    std::string slack;

    void attach(CLI::App *cmd) {
        cmd->add_option("--kind", kind, "regular|pregular|sparse|pbounded_uniform|geometric");
        cmd->add_option("--n", n, "number of jobs");
        cmd->add_option("--p", p, "gap bound or period");
        cmd->add_option("--K", K, "replenishment cost");
        cmd->add_option("--beta", beta, "geometric parameter in (0, 1)");
        cmd->add_option("--seed", seed, "generator seed");
        cmd->add_option("--slack", slack, "sparse slack list, n-1 comma-separated values");
    }

    Instance build() const {
        GenSpec spec;
        spec.kind = kind_or_usage(kind);
        spec.n = n;
        spec.p = p;
        spec.K = K;
        spec.beta = beta;
        spec.seed = seed;
        if (!slack.empty()) spec.slack = parse_int_grid(slack);
        return generate(spec);
    }
};

Instance load_instance(const std::string &path, std::size_t index) {
    const auto all = io::read_instances_file(path);
    if (index >= all.size()) {
        throw Error(ErrorCode::parse_error, "instance file holds " + std::to_string(all.size()) + " instance(s)");
    }
    return all[index];
}

int run(int argc, char **argv) {
    CLI::App app{"Joint replenishment + single machine scheduling (max flow time) toolkit"};
    app.require_subcommand(1);

    // generate
    GeneratorArgs gen_args;
    auto *gen_cmd = app.add_subcommand("generate", "emit an instance line 'K;r_1,...,r_n'");
    gen_args.attach(gen_cmd);
    gen_cmd->get_option("--kind")->required();
    gen_cmd->get_option("--n")->required();

    // simulate
    GeneratorArgs sim_gen;
    std::string sim_file;
    std::size_t sim_index = 0;
    std::string sim_policy = "algorithm1";
    std::optional<Cost> sim_K;
    bool sim_trace = false;
    bool sim_fast = false;
    auto *sim_cmd = app.add_subcommand("simulate", "run an online policy on one instance");
    sim_gen.attach(sim_cmd);
    sim_cmd->add_option("--instance", sim_file, "instance file");
    sim_cmd->add_option("--index", sim_index, "line of the instance file (0-based, default 0)");
    sim_cmd->add_option("--policy", sim_policy, "algorithm1|algorithm1_flush_on_last|immediate");
    sim_cmd->add_option("--cost", sim_K, "override the instance's replenishment cost");
    sim_cmd->add_flag("--trace", sim_trace, "print the decision log before the result row");
    sim_cmd->add_flag("--fast-forward", sim_fast, "skip idle steps (trace lists observed steps only)");

    // solve
    std::string solve_file;
    std::size_t solve_index = 0;
    std::string solve_method = "auto";
    bool solve_json = false;
    auto *solve_cmd = app.add_subcommand("solve", "compute the offline optimum");
    solve_cmd->add_option("--instance", solve_file, "instance file")->required();
    solve_cmd->add_option("--index", solve_index, "line of the instance file (0-based, default 0)");
    solve_cmd->add_option("--method", solve_method, "auto|brute_force|threshold_dp|greedy|closed_form");
    solve_cmd->add_flag("--json", solve_json, "also print the solution record");

    // experiment
    std::string exp_kind = "geometric";
    std::string exp_beta, exp_p, exp_n, exp_K = "1";
    std::size_t exp_replication = 100;
    std::uint64_t exp_seed = 1;
    std::string exp_opt = "auto";
    std::string exp_out;
    std::string exp_summary;
    std::string exp_policy = "algorithm1";
    int exp_jobs = 0;
    bool exp_timing = false;
    bool exp_trace = false;
    auto *exp_cmd = app.add_subcommand("experiment", "ALG vs OPT over a seeded instance grid, as CSV");
    exp_cmd->add_option("--kind", exp_kind, "geometric|pregular|regular|sparse|pbounded_uniform");
    exp_cmd->add_option("--beta", exp_beta, "comma-separated beta values");
    exp_cmd->add_option("--p", exp_p, "comma-separated p values or ranges a..b");
    exp_cmd->add_option("--n", exp_n, "comma-separated n values or ranges a..b")->required();
    exp_cmd->add_option("--K", exp_K, "comma-separated K values or ranges (default 1)");
    exp_cmd->add_option("--replication", exp_replication, "instances per cell (default 100)");
    exp_cmd->add_option("--seed", exp_seed, "master seed");
    exp_cmd->add_option("--opt-method", exp_opt, "auto|brute_force|threshold_dp|greedy|closed_form");
    exp_cmd->add_option("--policy", exp_policy, "online policy (default algorithm1)");
    exp_cmd->add_option("--out", exp_out, "CSV output file (default stdout)");
    exp_cmd->add_option("--summary", exp_summary, "per-cell summary CSV file");
    exp_cmd->add_option("--jobs", exp_jobs, "worker threads; results do not depend on it");
    exp_cmd->add_flag("--timing", exp_timing, "fill runtime_ms (output is then not byte-stable)");
    exp_cmd->add_flag("--trace", exp_trace, "log each finished trial to stderr");

    // adversary
    std::string adv_game;
    std::string adv_policy = "algorithm1";
    std::string adv_K = "1..100";
    std::optional<Time> adv_horizon;
    bool adv_transcript = false;
    auto *adv_cmd = app.add_subcommand("adversary", "play a lower-bound game against a policy");
    adv_cmd->add_option("--game", adv_game, "two_job|three_job")->required();
    adv_cmd->add_option("--policy", adv_policy, "policy under test");
    adv_cmd->add_option("--K", adv_K, "K values or ranges (default 1..100)");
    adv_cmd->add_option("--horizon", adv_horizon, "max waiting time before divergence (default 10K+10)");
    adv_cmd->add_flag("--transcript", adv_transcript, "print each game's transcript to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen_cmd->parsed()) {
        std::cout << io::format_instance_line(gen_args.build()) << '\n';
        return 0;
    }

    if (sim_cmd->parsed()) {
        Instance inst = [&] {
            if (!sim_file.empty()) return load_instance(sim_file, sim_index);
            if (sim_gen.kind.empty()) throw UsageError("simulate needs --instance or --kind/--n");
            return sim_gen.build();
        }();
        if (sim_K) inst = validate_instance({inst.releases().begin(), inst.releases().end()}, *sim_K);
        auto policy = policy_or_usage(sim_policy, inst.replenishment_cost());
        SimulationOptions opts;
        opts.fast_forward = sim_fast;
        const SimulationResult res = simulate(inst, *policy, opts);
        if (sim_trace) std::cout << format_trace(res.trace);
        std::cout << "policy,n,K,alg_cost,alg_q,f_max,replenishments\n"
                  << policy->name() << ',' << inst.size() << ',' << inst.replenishment_cost() << ','
                  << res.cost.total << ',' << res.cost.repl_count << ',' << res.cost.f_max << ','
                  << join(res.solution.replenishments, " ") << '\n';
        return 0;
    }

    if (solve_cmd->parsed()) {
        const Instance inst = load_instance(solve_file, solve_index);
        OptResult result;
        if (solve_method == "auto") {
            result = inst.size() <= kBruteForceCap ? brute_force_opt(inst) : threshold_dp_opt(inst);
        } else if (solve_method == "brute_force") {
            result = brute_force_opt(inst);
        } else if (solve_method == "threshold_dp") {
            result = threshold_dp_opt(inst);
        } else if (solve_method == "greedy") {
            result = block_partition_greedy(inst);
        } else if (solve_method == "closed_form") {
            const auto r = inst.releases();
            const Time p = r.size() > 1 ? r[1] - r[0] : 1;
            if (!is_p_regular(r, p)) {
                throw Error(ErrorCode::invalid_argument, "closed form needs a p-regular instance");
            }
            const auto n = static_cast<std::int64_t>(inst.size());
            const PRegularOpt opt = pregular_opt(n, p, inst.replenishment_cost());
            Solution sol = pregular_witness(n, p, inst.replenishment_cost(), opt.q_star);
            for (auto &s : sol.starts) s += r[0];
            for (auto &t : sol.replenishments) t += r[0];
            result = {evaluate(inst, sol).total, std::move(sol), static_cast<std::size_t>(opt.q_star),
                      OptMethod::closed_form};
        } else {
            throw UsageError("unknown method '" + solve_method + "'");
        }
        const CostBreakdown cost = evaluate(inst, result.solution);
        std::cout << "opt_method,cost,q,f_max,replenishments\n"
                  << to_string(result.method) << ',' << result.cost << ',' << result.q << ',' << cost.f_max << ','
                  << join(result.solution.replenishments, " ") << '\n';
        if (solve_json) std::cout << io::solution_to_json(result.solution) << '\n';
        return 0;
    }

    if (exp_cmd->parsed()) {
        ExperimentConfig config;
        config.kind = kind_or_usage(exp_kind);
        if (!exp_beta.empty()) config.betas = parse_real_list(exp_beta);
        if (!exp_p.empty()) config.ps = parse_int_grid(exp_p);
        config.ns = parse_int_grid(exp_n);
        config.Ks = parse_int_grid(exp_K);
        config.replication = exp_replication;
        config.master_seed = exp_seed;
        try {
            config.opt = parse_opt_choice(exp_opt);
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
        config.policy = exp_policy;
        policy_or_usage(exp_policy, 1);
        config.timing = exp_timing;

        const auto records = run_experiment(config, Execution::openmp, exp_jobs);
        if (exp_trace) {
            for (const auto &r : records) std::cerr << format_record(r) << '\n';
        }
        const auto cells = summarize(records);
        if (exp_out.empty()) {
            write_csv(std::cout, records);
        } else {
            std::ofstream out(exp_out);
            if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + exp_out + "'");
            write_csv(out, records);
        }
        if (!exp_summary.empty()) {
            std::ofstream out(exp_summary);
            if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + exp_summary + "'");
            write_summary(out, cells);
        } else {
            write_summary(exp_out.empty() ? std::cerr : std::cout, cells);
        }
        return 0;
    }

    if (adv_cmd->parsed()) {
        if (adv_game != "two_job" && adv_game != "three_job") {
            throw UsageError("unknown game '" + adv_game + "' (two_job|three_job)");
        }
        policy_or_usage(adv_policy, 1);
        std::cout << game_report_csv_header() << '\n';
        for (Cost K : parse_int_grid(adv_K)) {
            auto policy = policy_or_usage(adv_policy, K);
            GameOptions opts;
            opts.horizon = adv_horizon;
            const GameReport report =
                adv_game == "two_job" ? two_job_game(*policy, K, opts) : three_job_game(*policy, K, opts);
            std::cout << game_report_csv_row(report) << '\n';
            if (adv_transcript) {
                for (const auto &line : report.transcript) std::cerr << "K=" << K << ' ' << line << '\n';
            }
        }
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const jrpsched::Error &e) {
        std::cerr << "error (" << jrpsched::to_string(e.code()) << "): " << e.what() << '\n';
        return e.code() == jrpsched::ErrorCode::size_cap_exceeded ? kExitCap : kExitInfeasible;
    }
}
