#include "jrpsched/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <ostream>
#include <tuple>

#include "jrpsched/format.hpp"
#include "jrpsched/online_engine.hpp"

namespace jrpsched {

std::string_view to_string(OptChoice choice) {
    switch (choice) {
    case OptChoice::automatic: return "auto";
    case OptChoice::brute_force: return "brute_force";
    case OptChoice::threshold_dp: return "threshold_dp";
    case OptChoice::greedy: return "greedy";
    case OptChoice::closed_form: return "closed_form";
    }
    return "unknown";
}

OptChoice parse_opt_choice(std::string_view name) {
    for (OptChoice c : {OptChoice::automatic, OptChoice::brute_force, OptChoice::threshold_dp, OptChoice::greedy,
                        OptChoice::closed_form}) {
        if (to_string(c) == name) return c;
    }
    throw Error(ErrorCode::invalid_argument, "unknown opt method '" + std::string(name) + "'");
}

namespace {

bool is_regular_kind(GenKind kind) { return kind == GenKind::regular || kind == GenKind::pregular; }

std::vector<Time> params_of(const ExperimentConfig &config) {
    switch (config.kind) {
    case GenKind::pregular:
    case GenKind::pbounded_uniform: return config.ps;
    default: return {0};
    }
}

std::string param_label(const TrialSpec &t) {
    switch (t.kind) {
    case GenKind::geometric: return format_double(t.beta);
    case GenKind::pregular:
    case GenKind::pbounded_uniform: return std::to_string(t.p);
    case GenKind::regular: return "1";
    case GenKind::sparse: return "";
    }
    return "";
}

struct OfflineOutcome {
    Cost cost;
    std::size_t q;
    std::string method;
    std::optional<Cost> lower;
};

// Dropping jobs never raises the optimum, so the exact optimum of any
// subsequence is a lower bound. Two subsequences small enough for the DP are
// tried: the first kThresholdDpCap jobs and an evenly strided sample.
Cost bracket_lower_bound(const Instance &inst) {
    const auto r = inst.releases();
    const Cost K = inst.replenishment_cost();
    const std::size_t cap = kThresholdDpCap;
    const std::size_t stride = (r.size() + cap - 1) / cap;
    std::vector<Time> sample;
    for (std::size_t j = 0; j < r.size(); j += stride) sample.push_back(r[j]);
    const auto head = static_cast<std::ptrdiff_t>(std::min(cap, r.size()));
    const Cost prefix = threshold_dp_opt(validate_instance({r.begin(), r.begin() + head}, K)).cost;
    const Cost strided = threshold_dp_opt(validate_instance(std::move(sample), K)).cost;
    return std::max(prefix, strided);
}

OfflineOutcome solve_offline(const TrialSpec &t, const Instance &inst, OptChoice choice) {
    const auto n = static_cast<std::size_t>(t.n);
    if (choice == OptChoice::automatic) {
        if (is_regular_kind(t.kind)) choice = OptChoice::closed_form;
        else if (n <= kBruteForceCap) choice = OptChoice::brute_force;
        else if (n <= kThresholdDpCap) choice = OptChoice::threshold_dp;
        else {
            const OptResult upper = block_partition_greedy(inst);
            return {upper.cost, upper.q, "bracket_bound", bracket_lower_bound(inst)};
        }
    }
    switch (choice) {
    case OptChoice::closed_form: {
        const Time p = t.kind == GenKind::regular ? 1 : t.p;
        const PRegularOpt opt = pregular_opt(t.n, p, t.K);
        return {opt.cost, static_cast<std::size_t>(opt.q_star), std::string(to_string(OptMethod::closed_form)), {}};
    }
    case OptChoice::brute_force: {
        const OptResult r = brute_force_opt(inst);
        return {r.cost, r.q, std::string(to_string(r.method)), {}};
    }
    case OptChoice::threshold_dp: {
        const OptResult r = threshold_dp_opt(inst);
        return {r.cost, r.q, std::string(to_string(r.method)), {}};
    }
    case OptChoice::greedy: {
        const OptResult r = block_partition_greedy(inst);
        return {r.cost, r.q, std::string(to_string(r.method)), {}};
    }
    case OptChoice::automatic: break;
    }
    throw Error(ErrorCode::invalid_argument, "unhandled opt method");
}

} // namespace

void validate_config(const ExperimentConfig &config) {
    if (config.ns.empty()) throw Error(ErrorCode::invalid_argument, "experiment needs at least one n");
    if (config.Ks.empty()) throw Error(ErrorCode::invalid_argument, "experiment needs at least one K");
    if (config.replication < 1) throw Error(ErrorCode::invalid_argument, "replication must be >= 1");
    for (auto n : config.ns) {
        if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
    }
    for (auto K : config.Ks) {
        if (K < 1) throw Error(ErrorCode::invalid_cost, "K must be >= 1");
    }
    make_policy(config.policy, 1);
    switch (config.kind) {
    case GenKind::geometric:
        if (config.betas.empty()) throw Error(ErrorCode::invalid_argument, "geometric experiment needs --beta");
        for (double b : config.betas) {
            if (!(b > 0.0 && b < 1.0)) throw Error(ErrorCode::invalid_argument, "beta must lie in (0, 1)");
        }
        break;
    case GenKind::pregular:
    case GenKind::pbounded_uniform:
        if (config.ps.empty()) throw Error(ErrorCode::invalid_argument, "this kind needs --p");
        for (Time p : config.ps) {
            if (p < 1) throw Error(ErrorCode::invalid_argument, "p must be >= 1");
        }
        break;
    default: break;
    }
    const auto largest = static_cast<std::size_t>(*std::max_element(config.ns.begin(), config.ns.end()));
    if (config.opt == OptChoice::brute_force && largest > kBruteForceCap) {
        throw Error(ErrorCode::size_cap_exceeded,
                    "brute force refuses n = " + std::to_string(largest) + " (cap " + std::to_string(kBruteForceCap) + ")");
    }
    if (config.opt == OptChoice::threshold_dp && largest > kThresholdDpCap) {
        throw Error(ErrorCode::size_cap_exceeded, "threshold DP refuses n = " + std::to_string(largest) + " (cap " +
                                                      std::to_string(kThresholdDpCap) + ")");
    }
    if (config.opt == OptChoice::closed_form && !is_regular_kind(config.kind)) {
        throw Error(ErrorCode::invalid_argument, "closed form optimum exists only for (p-)regular inputs");
    }
}

std::vector<TrialSpec> expand_trials(const ExperimentConfig &config) {
    std::vector<TrialSpec> out;
    const std::vector<double> betas = config.kind == GenKind::geometric ? config.betas : std::vector<double>{0.5};
    const std::vector<Time> ps = params_of(config);
    for (Cost K : config.Ks) {
        for (double beta : betas) {
            for (Time p : ps) {
                for (std::int64_t n : config.ns) {
                    for (std::size_t rep = 0; rep < config.replication; ++rep) {
                        TrialSpec t;
                        t.instance_id = out.size();
                        t.kind = config.kind;
                        t.n = n;
                        t.beta = beta;
                        t.p = p;
                        t.K = K;
                        t.seed = derive_seed(config.master_seed, t.instance_id);
                        out.push_back(t);
                    }
                }
            }
        }
    }
    return out;
}

ExperimentRecord run_trial(const TrialSpec &t, const ExperimentConfig &config) {
    const auto begin = std::chrono::steady_clock::now();

    GenSpec spec;
    spec.kind = t.kind;
    spec.n = t.n;
    spec.p = t.p;
    spec.K = t.K;
    spec.beta = t.beta;
    spec.seed = t.seed;
    const Instance inst = generate(spec);

    auto policy = make_policy(config.policy, t.K);
    SimulationOptions sim;
    sim.fast_forward = true;
    const SimulationResult alg = simulate(inst, *policy, sim);
    const OfflineOutcome opt = solve_offline(t, inst, config.opt);

    ExperimentRecord rec;
    rec.instance_id = t.instance_id;
    rec.kind = t.kind;
    rec.n = t.n;
    rec.p_or_beta = param_label(t);
    rec.K = t.K;
    rec.seed = t.seed;
    rec.alg_cost = alg.cost.total;
    rec.alg_q = alg.cost.repl_count;
    rec.opt_cost = opt.cost;
    rec.opt_q = opt.q;
    rec.opt_method = opt.method;
    rec.ratio = static_cast<double>(rec.alg_cost) / static_cast<double>(rec.opt_cost);
    if (opt.lower) {
        rec.opt_lower = opt.lower;
        rec.ratio_upper = static_cast<double>(rec.alg_cost) / static_cast<double>(*opt.lower);
    }
    if (config.timing) {
        rec.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
    }
    return rec;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig &config, Execution execution, int workers) {
    validate_config(config);
    const std::vector<TrialSpec> trials = expand_trials(config);
    std::vector<ExperimentRecord> records(trials.size());

    if (execution == Execution::serial) {
        for (std::size_t i = 0; i < trials.size(); ++i) records[i] = run_trial(trials[i], config);
        return records;
    }

    const int threads = workers > 0 ? workers : max_workers();
    const auto count = static_cast<std::int64_t>(trials.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            records[static_cast<std::size_t>(i)] = run_trial(trials[static_cast<std::size_t>(i)], config);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord> &records) {
    using Key = std::tuple<Cost, std::string, std::int64_t>;
    std::vector<Key> order;
    std::map<Key, std::vector<const ExperimentRecord *>> cells;
    for (const auto &r : records) {
        Key key{r.K, r.p_or_beta, r.n};
        auto [it, inserted] = cells.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(&r);
    }

    std::vector<CellSummary> out;
    for (const auto &key : order) {
        const auto &rows = cells.at(key);
        CellSummary s{rows.front()->kind, rows.front()->n, rows.front()->p_or_beta, rows.front()->K, rows.size(),
                      0.0, rows.front()->ratio, rows.front()->ratio, std::nullopt};
        double sum = 0.0;
        double sum_upper = 0.0;
        bool bracketed = false;
        for (const auto *r : rows) {
            sum += r->ratio;
            s.min_ratio = std::min(s.min_ratio, r->ratio);
            s.max_ratio = std::max(s.max_ratio, r->ratio);
            if (r->ratio_upper) {
                bracketed = true;
                sum_upper += *r->ratio_upper;
            } else {
                sum_upper += r->ratio;
            }
        }
        s.mean_ratio = sum / static_cast<double>(rows.size());
        if (bracketed) s.mean_ratio_upper = sum_upper / static_cast<double>(rows.size());
        out.push_back(std::move(s));
    }
    return out;
}

std::string format_record(const ExperimentRecord &r) {
    std::string ratio = format_double(r.ratio);
    if (r.ratio_upper) ratio += ".." + format_double(*r.ratio_upper);
    return std::to_string(r.instance_id) + "," + std::string(to_string(r.kind)) + "," + std::to_string(r.n) + "," +
           r.p_or_beta + "," + std::to_string(r.K) + "," + std::to_string(r.seed) + "," + std::to_string(r.alg_cost) +
           "," + std::to_string(r.alg_q) + "," + std::to_string(r.opt_cost) + "," + std::to_string(r.opt_q) + "," +
           r.opt_method + "," + ratio + "," + (r.runtime_ms ? format_double(*r.runtime_ms) : "");
}

void write_csv(std::ostream &out, const std::vector<ExperimentRecord> &records) {
    out << kExperimentCsvHeader << '\n';
    for (const auto &r : records) out << format_record(r) << '\n';
}

void write_summary(std::ostream &out, const std::vector<CellSummary> &cells) {
    out << kSummaryCsvHeader << '\n';
    for (const auto &c : cells) {
        out << to_string(c.kind) << ',' << c.n << ',' << c.p_or_beta << ',' << c.K << ',' << c.instances << ','
            << format_double(c.mean_ratio) << ',' << format_double(c.min_ratio) << ',' << format_double(c.max_ratio)
            << ',' << (c.mean_ratio_upper ? format_double(*c.mean_ratio_upper) : "") << '\n';
    }
}

} // namespace jrpsched
