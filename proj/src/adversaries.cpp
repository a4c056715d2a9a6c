#include "jrpsched/adversaries.hpp"

#include <algorithm>

#include "jrpsched/format.hpp"
#include "jrpsched/offline_solvers.hpp"

namespace jrpsched {

namespace {

// Releases job i+1 one time unit after job i starts, up to `total` jobs.
class ChainAdversary final : public ReleaseSource {
public:
    explicit ChainAdversary(std::size_t total, std::vector<std::string> &transcript)
        : total_(total), transcript_(transcript) {
        released_.push_back(0);
        transcript_.push_back("release job=1 at=0");
    }

    std::optional<Arrival> peek() const override {
        if (next_ >= released_.size()) return std::nullopt;
        return Arrival{released_[next_], next_ + 1 == total_};
    }
    void pop() override { ++next_; }
    bool exhausted() const override { return next_ >= total_; }

    void on_flush(Time replenished_at, std::span<const std::size_t> jobs, std::span<const Time> starts) override {
        transcript_.push_back("replenish at=" + std::to_string(replenished_at));
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            transcript_.push_back("start job=" + std::to_string(jobs[k] + 1) + " at=" + std::to_string(starts[k]));
            if (jobs[k] + 1 == released_.size() && released_.size() < total_) {
                observed_.push_back(starts[k]);
                released_.push_back(starts[k] + 1);
                transcript_.push_back("release job=" + std::to_string(released_.size()) +
                                      " at=" + std::to_string(released_.back()) +
                                      (released_.size() == total_ ? " last" : ""));
            }
        }
    }

    const std::vector<Time> &observed_starts() const { return observed_; }

private:
    std::size_t total_;
    std::vector<std::string> &transcript_;
    std::vector<Time> released_;
    std::vector<Time> observed_;
    std::size_t next_ = 0;
};

GameReport play(std::string game, std::size_t jobs, Policy &policy, Cost K, const GameOptions &opts) {
    if (K < 1) {
        throw Error(ErrorCode::invalid_cost, "replenishment cost K must be >= 1");
    }
    GameReport report;
    report.game = std::move(game);
    report.policy = std::string(policy.name());
    report.K = K;

    ChainAdversary adversary(jobs, report.transcript);
    SimulationOptions sim;
    sim.fast_forward = true;
    sim.stall_limit = opts.horizon.value_or(checked_add(checked_mul(10, K), 10));
    const SimulationResult result = simulate(adversary, policy, K, sim);

    report.releases.assign(result.instance.releases().begin(), result.instance.releases().end());
    report.observed_starts = adversary.observed_starts();
    report.alg_cost = result.cost.total;
    report.opt_cost = brute_force_opt(result.instance).cost;
    report.ratio = static_cast<double>(report.alg_cost) / static_cast<double>(report.opt_cost);
    return report;
}

} // namespace

Cost two_job_formula_opt(Cost K, Time t) { return std::min(2 * K + 1, K + t + 2); }

Cost three_job_formula_opt(Cost K, Time t1, Time t2) {
    return std::min({K + t2 + 2, 2 * K + t1 + 2, 2 * K + (t2 - t1) + 1, 3 * K + 1});
}

GameReport two_job_game(Policy &policy, Cost K, const GameOptions &opts) {
    GameReport report = play("two_job", 2, policy, K, opts);
    report.formula_opt = two_job_formula_opt(K, report.observed_starts.at(0));
    return report;
}

GameReport three_job_game(Policy &policy, Cost K, const GameOptions &opts) {
    GameReport report = play("three_job", 3, policy, K, opts);
    report.formula_opt = three_job_formula_opt(K, report.observed_starts.at(0), report.observed_starts.at(1));
    return report;
}

std::string game_report_csv_header() {
    return "game,policy,K,releases,observed_starts,alg_cost,opt_cost,formula_opt,formula_agrees,ratio";
}

std::string game_report_csv_row(const GameReport &r) {
    return r.game + "," + r.policy + "," + std::to_string(r.K) + "," + join(r.releases, " ") + "," +
           join(r.observed_starts, " ") + "," + std::to_string(r.alg_cost) + "," + std::to_string(r.opt_cost) + "," +
           std::to_string(r.formula_opt) + "," + (r.formula_agrees() ? "true" : "false") + "," +
           format_double(r.ratio);
}

} // namespace jrpsched
