#include <gtest/gtest.h>

#include <random>

#include "jrpsched/generators.hpp"
#include "jrpsched/offline_solvers.hpp"
#include "jrpsched/online_engine.hpp"
#include "oracles.hpp"
#include "trace_checks.hpp"

using namespace jrpsched;

namespace {

SimulationResult run_alg1(std::vector<Time> releases, Cost K, bool fast = false) {
    Algorithm1Policy policy(K);
    return simulate(validate_instance(std::move(releases), K), policy, {.fast_forward = fast});
}

class NeverFlush final : public Policy {
public:
    PolicyAction decide(const PolicyObservation &) override { return PolicyAction::wait(); }
    std::string_view name() const override { return "never"; }
};

class BackwardsSource final : public ReleaseSource {
public:
    std::optional<Arrival> peek() const override {
        if (next_ >= 2) return std::nullopt;
        return Arrival{next_ == 0 ? Time{5} : Time{3}, next_ == 1};
    }
    void pop() override { ++next_; }
    bool exhausted() const override { return next_ >= 2; }

private:
    std::size_t next_ = 0;
};

} // namespace

TEST(PendingFmax, Examples) {
    const std::vector<PendingJob> two{{0, 0}, {1, 1}};
    EXPECT_EQ(pending_fmax(two, 1, 0), 2);
    EXPECT_EQ(pending_fmax({}, 7, 0), 0);
    // machine busy until 4: jobs run at 4, 5
    EXPECT_EQ(pending_fmax(two, 1, 4), 5);
}

TEST(Algorithm1, RegularUnitGaps) {
    const SimulationResult r = run_alg1({0, 1, 2, 3, 4, 5}, 1);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{0, 2, 5}));
    EXPECT_EQ(r.cost.total, 6);
    EXPECT_EQ(r.cost.f_max, 3);
    EXPECT_FALSE(oracle::algorithm1_violation(r));
}

TEST(Algorithm1, SingleJobWaitsKMinusOne) {
    const SimulationResult r = run_alg1({0}, 3);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{2}));
    EXPECT_EQ(r.cost.total, 6);
}

TEST(Algorithm1, SparsePair) {
    const SimulationResult r = run_alg1({0, 10}, 3);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{2, 15}));
    EXPECT_EQ(r.cost.total, 12);
    EXPECT_EQ(brute_force_opt(r.instance).cost, 7);
}

TEST(Algorithm1, TraceFormat) {
    const SimulationResult r = run_alg1({0, 1}, 1);
    EXPECT_EQ(format_trace(r.trace), "t=0 action=replenish pending=1 fmax=1\n"
                                     "t=1 action=wait pending=1 fmax=1\n"
                                     "t=2 action=replenish pending=1 fmax=2\n");
}

TEST(Algorithm1, InvariantsOnRandomInputs) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const Cost K = 1 + static_cast<Cost>(rng() % 6);
        const auto releases = oracle::random_releases(rng, 1 + rng() % 40, 1, 4 * K, static_cast<Time>(rng() % 5));
        const SimulationResult r = run_alg1(releases, K);
        const auto bad = oracle::algorithm1_violation(r);
        ASSERT_FALSE(bad) << *bad << " (trial " << trial << ")";
    }
}

TEST(Algorithm1, GapsNeedNotGrow) {
    // a late second job stretches the second gap past the third
    const SimulationResult r = run_alg1({0, 10, 12}, 1);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{0, 11, 14}));
    EXPECT_FALSE(oracle::algorithm1_violation(r));
    EXPECT_TRUE(oracle::gap_growth_violation(r));
    EXPECT_FALSE(oracle::gap_growth_violation(run_alg1(gen_sparse(8, 2), 2)));
}

TEST(Algorithm1, FastForwardMatchesStepping) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Cost K = 1 + static_cast<Cost>(rng() % 8);
        const auto releases = oracle::random_releases(rng, 1 + rng() % 30, 1, 5 * K);
        const SimulationResult step = run_alg1(releases, K);
        const SimulationResult fast = run_alg1(releases, K, true);
        ASSERT_EQ(step.solution, fast.solution) << "trial " << trial;
        EXPECT_EQ(step.trace.replenishments.size(), fast.trace.replenishments.size());
        EXPECT_LE(fast.trace.entries.size(), step.trace.entries.size());
    }
}

TEST(Algorithm1, TwoCompetitive) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const Cost K = 1 + static_cast<Cost>(rng() % 5);
        const auto releases = oracle::random_releases(rng, 1 + rng() % 12, 1, 3 * K);
        const SimulationResult r = run_alg1(releases, K);
        const Cost opt = brute_force_opt(r.instance).cost;
        ASSERT_LE(r.cost.total, 2 * opt) << "trial " << trial;
    }
}

TEST(Algorithm1, TightOnSparseInputs) {
    for (Cost K : {1, 2, 5}) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            const SimulationResult r = run_alg1(gen_sparse(n, K), K);
            EXPECT_EQ(r.cost.total, 2 * K * n);
            EXPECT_EQ(brute_force_opt(r.instance).cost, K * n + 1);
        }
    }
}

TEST(Algorithm1FlushOnLast, FlushesWhenLastArrives) {
    Algorithm1Policy policy(3, true);
    const SimulationResult r = simulate(validate_instance({0, 10}, 3), policy);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{2, 10}));
    EXPECT_EQ(r.cost.total, 9);

    Algorithm1Policy single(4, true);
    EXPECT_EQ(simulate(validate_instance({0}, 4), single).cost.total, 5);
}

TEST(Immediate, ReplenishesEveryArrival) {
    ImmediatePolicy policy;
    const SimulationResult r = simulate(validate_instance({0, 1, 5}, 2), policy);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{0, 1, 5}));
    EXPECT_EQ(r.cost.total, 7);
}

TEST(Engine, DivergenceOnStall) {
    NeverFlush never;
    FixedReleases source({0, 1});
    try {
        simulate(source, never, 1, {.stall_limit = 20});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::divergence);
    }
}

TEST(Engine, RejectsNonIncreasingSource) {
    BackwardsSource source;
    Algorithm1Policy policy(10);
    try {
        simulate(source, policy, 10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::input_order);
        EXPECT_EQ(e.job(), 1u);
    }
}

TEST(Engine, ObservationsSeeOnlyReleasedJobs) {
    class Recorder final : public Policy {
    public:
        PolicyAction decide(const PolicyObservation &obs) override {
            for (const auto &j : obs.pending) EXPECT_LE(j.release, obs.now);
            EXPECT_EQ(obs.last_job_announced, obs.now >= 7);
            return obs.now >= 9 ? PolicyAction::flush() : PolicyAction::wait();
        }
        std::string_view name() const override { return "recorder"; }
    } rec;
    const SimulationResult r = simulate(validate_instance({0, 3, 7}, 1), rec);
    EXPECT_EQ(r.solution.replenishments, (std::vector<Time>{9}));
    EXPECT_EQ(r.solution.starts, (std::vector<Time>{9, 10, 11}));
}

TEST(MakePolicy, NamesAndErrors) {
    for (const auto &name : policy_names()) EXPECT_EQ(make_policy(name, 2)->name(), name);
    EXPECT_THROW(make_policy("bogus", 1), Error);
}
