#include <gtest/gtest.h>

#include <cmath>

#include "jrpsched/generators.hpp"

using namespace jrpsched;

TEST(Generators, PRegular) {
    EXPECT_EQ(gen_pregular(3, 2), (std::vector<Time>{0, 2, 4}));
    EXPECT_EQ(gen_pregular(1, 7), (std::vector<Time>{0}));
    EXPECT_TRUE(is_p_regular(gen_pregular(9, 3), 3));
    EXPECT_THROW(gen_pregular(0, 1), Error);
}

TEST(Generators, Sparse) {
    EXPECT_EQ(gen_sparse(3, 2), (std::vector<Time>{0, 2, 6}));
    const std::vector<Time> slack{1, 0, 4};
    EXPECT_EQ(gen_sparse(4, 1, slack), (std::vector<Time>{0, 2, 4, 11}));
    for (Cost K : {1, 3, 10}) EXPECT_TRUE(is_sparse(gen_sparse(30, K), K));
    EXPECT_FALSE(is_sparse(std::vector<Time>{0, 1, 2}, 1));
    const std::vector<Time> short_slack{1};
    EXPECT_THROW(gen_sparse(4, 1, short_slack), Error);
}

TEST(Generators, PBoundedUniform) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = gen_pbounded_uniform(200, 3, seed);
        EXPECT_EQ(r.front(), 0);
        EXPECT_TRUE(is_p_bounded(r, 3));
    }
    // every gap value shows up
    const auto r = gen_pbounded_uniform(1000, 4, 9);
    std::vector<int> seen(5, 0);
    for (std::size_t j = 1; j < r.size(); ++j) ++seen[static_cast<std::size_t>(r[j] - r[j - 1])];
    for (int g = 1; g <= 4; ++g) EXPECT_GT(seen[static_cast<std::size_t>(g)], 150);
}

TEST(Generators, GeometricDeterministic) {
    EXPECT_EQ(gen_geometric(50, 0.3, 17), gen_geometric(50, 0.3, 17));
    EXPECT_NE(gen_geometric(50, 0.3, 17), gen_geometric(50, 0.3, 18));
    const auto r = gen_geometric(500, 0.9, 3);
    EXPECT_GE(r.front(), 1);
    for (std::size_t j = 1; j < r.size(); ++j) EXPECT_GE(r[j] - r[j - 1], 1);
}

TEST(Generators, GeometricGolden) {
    EXPECT_EQ(gen_geometric(12, 0.5, 42), (std::vector<Time>{1, 4, 6, 8, 13, 14, 17, 18, 20, 21, 24, 26}));
}

TEST(Generators, GeometricMeanGap) {
    const std::int64_t n = 100000;
    const auto r = gen_geometric(n, 0.01, 2024);
    const double mean = static_cast<double>(r.back()) / static_cast<double>(n);
    EXPECT_NEAR(mean, 100.0, 2.0);
}

TEST(Generators, GeometricRejectsBeta) {
    EXPECT_THROW(gen_geometric(5, 0.0, 1), Error);
    EXPECT_THROW(gen_geometric(5, 1.0, 1), Error);
    EXPECT_THROW(gen_geometric(5, -0.2, 1), Error);
    EXPECT_THROW(gen_geometric(5, std::nan(""), 1), Error);
}

TEST(CounterRng, MatchesSplitMixStream) {
    // first SplitMix64 outputs for seed 0
    CounterRng rng(0);
    EXPECT_EQ(rng.next_u64(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.counter(), 2u);
}

TEST(CounterRng, BoundedAndOpenUnit) {
    CounterRng rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_open_unit();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(rng.next_below(7), 7u);
    }
}

TEST(Generate, DispatchesOnKind) {
    EXPECT_EQ(generate({.kind = GenKind::regular, .n = 4, .K = 2}), validate_instance({0, 1, 2, 3}, 2));
    EXPECT_EQ(generate({.kind = GenKind::sparse, .n = 3, .K = 2}), validate_instance({0, 2, 6}, 2));
    EXPECT_EQ(parse_gen_kind("pbounded_uniform"), GenKind::pbounded_uniform);
    EXPECT_THROW(parse_gen_kind("zipf"), Error);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}
