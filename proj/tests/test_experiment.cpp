#include <gtest/gtest.h>

#include <sstream>

#include "jrpsched/experiment.hpp"

using namespace jrpsched;

namespace {

ExperimentConfig small_geometric() {
    ExperimentConfig c;
    c.kind = GenKind::geometric;
    c.betas = {0.05, 0.5};
    c.ns = {5, 40};
    c.Ks = {1, 3};
    c.replication = 6;
    c.master_seed = 77;
    return c;
}

std::string csv_of(const std::vector<ExperimentRecord> &records) {
    std::ostringstream os;
    write_csv(os, records);
    return os.str();
}

ErrorCode config_error(const ExperimentConfig &c) {
    try {
        validate_config(c);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "config accepted";
    return ErrorCode::invalid_argument;
}

} // namespace

TEST(Experiment, CsvHeader) {
    std::ostringstream os;
    write_csv(os, {});
    EXPECT_EQ(os.str(), "instance_id,kind,n,p_or_beta,K,seed,alg_cost,alg_q,opt_cost,opt_q,opt_method,ratio,"
                        "runtime_ms\n");
}

TEST(Experiment, TrialOrderAndSeeds) {
    const auto trials = expand_trials(small_geometric());
    ASSERT_EQ(trials.size(), 2u * 2u * 2u * 6u);
    for (std::size_t i = 0; i < trials.size(); ++i) {
        EXPECT_EQ(trials[i].instance_id, i);
        EXPECT_EQ(trials[i].seed, derive_seed(77, i));
    }
    EXPECT_EQ(trials.front().K, 1);
    EXPECT_EQ(trials.back().K, 3);
    EXPECT_EQ(trials[6].n, 40);
}

TEST(Experiment, IdenticalAcrossExecutionModes) {
    const ExperimentConfig c = small_geometric();
    const std::string serial = csv_of(run_experiment(c, Execution::serial));
    EXPECT_EQ(csv_of(run_experiment(c, Execution::openmp, 1)), serial);
    EXPECT_EQ(csv_of(run_experiment(c, Execution::openmp, 3)), serial);
    EXPECT_EQ(csv_of(run_experiment(c, Execution::openmp, 8)), serial);
}

TEST(Experiment, RecordsAreConsistent) {
    const auto records = run_experiment(small_geometric());
    for (const auto &r : records) {
        EXPECT_EQ(r.opt_method, r.n <= 16 ? "brute_force" : "threshold_dp") << r.n;
        EXPECT_GE(r.ratio, 1.0);
        EXPECT_LE(r.ratio, 2.0);
        EXPECT_FALSE(r.runtime_ms);
    }
}

TEST(Experiment, SummaryMeansMatchRecords) {
    const auto records = run_experiment(small_geometric());
    const auto cells = summarize(records);
    ASSERT_EQ(cells.size(), 8u);
    for (const auto &cell : cells) {
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto &r : records) {
            if (r.K == cell.K && r.n == cell.n && r.p_or_beta == cell.p_or_beta) {
                sum += r.ratio;
                ++count;
            }
        }
        EXPECT_EQ(count, cell.instances);
        EXPECT_DOUBLE_EQ(cell.mean_ratio, sum / static_cast<double>(count));
    }
    std::ostringstream os;
    write_summary(os, cells);
    EXPECT_EQ(os.str().substr(0, kSummaryCsvHeader.size()), kSummaryCsvHeader);
}

TEST(Experiment, RegularUsesClosedForm) {
    ExperimentConfig c;
    c.kind = GenKind::pregular;
    c.ps = {2};
    c.ns = {7};
    c.Ks = {3};
    c.replication = 1;
    const auto records = run_experiment(c);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].opt_method, "closed_form");
    EXPECT_EQ(records[0].opt_cost, 13);
    EXPECT_EQ(records[0].p_or_beta, "2");
}

TEST(Experiment, LargeInstancesAreBracketed) {
    ExperimentConfig c;
    c.kind = GenKind::pbounded_uniform;
    c.ps = {3};
    c.ns = {2500};
    c.replication = 1;
    const auto records = run_experiment(c);
    const auto &r = records.at(0);
    EXPECT_EQ(r.opt_method, "bracket_bound");
    ASSERT_TRUE(r.opt_lower);
    EXPECT_LE(*r.opt_lower, r.opt_cost);
    EXPECT_NE(format_record(r).find(".."), std::string::npos);
}

TEST(Experiment, TimingColumnOnlyWhenAsked) {
    ExperimentConfig c = small_geometric();
    c.timing = true;
    c.replication = 1;
    for (const auto &r : run_experiment(c)) EXPECT_TRUE(r.runtime_ms);
}

TEST(Experiment, ConfigErrorsBeforeWork) {
    ExperimentConfig brute = small_geometric();
    brute.opt = OptChoice::brute_force;
    brute.ns = {10, 17};
    EXPECT_EQ(config_error(brute), ErrorCode::size_cap_exceeded);

    ExperimentConfig dp = small_geometric();
    dp.opt = OptChoice::threshold_dp;
    dp.ns = {2001};
    EXPECT_EQ(config_error(dp), ErrorCode::size_cap_exceeded);

    ExperimentConfig closed = small_geometric();
    closed.opt = OptChoice::closed_form;
    EXPECT_EQ(config_error(closed), ErrorCode::invalid_argument);

    ExperimentConfig beta = small_geometric();
    beta.betas = {1.5};
    EXPECT_EQ(config_error(beta), ErrorCode::invalid_argument);

    ExperimentConfig policy = small_geometric();
    policy.policy = "nope";
    EXPECT_EQ(config_error(policy), ErrorCode::invalid_argument);

    EXPECT_EQ(parse_opt_choice("auto"), OptChoice::automatic);
    EXPECT_THROW(parse_opt_choice("lp"), Error);
}
