#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "jrpsched/core_model.hpp"

namespace jrpsched {

/**
 * Counter-based 64-bit generator: the i-th output (i = 1, 2, ...) is
 * splitmix64_mix(seed + i * 0x9E3779B97F4A7C15), i.e. the SplitMix64 stream
 * started at `seed`. Any draw can be recomputed from (seed, i), and the
 * arithmetic is pure uint64 so outputs match on every platform.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    // 53-bit uniform strictly inside (0, 1): ((x >> 11) + 0.5) * 2^-53.
    double next_open_unit();
    // Uniform on {0, ..., bound - 1} via the high word of x * bound.
    std::uint64_t next_below(std::uint64_t bound);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

// Seed of the instance with the given index under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class GenKind { regular, pregular, sparse, pbounded_uniform, geometric };

std::string_view to_string(GenKind kind);
GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
    GenKind kind = GenKind::pregular;
    std::int64_t n = 1;
    Time p = 1;          // pregular, pbounded_uniform
    Cost K = 1;
    double beta = 0.5;   // geometric
    std::uint64_t seed = 0;
    std::vector<Time> slack; // sparse; empty means all zero
};

/// 0, p, ..., (n-1)p
std::vector<Time> gen_pregular(std::int64_t n, Time p);

/// r_1 = 0, r_{j+1} = r_j + K j + slack_j. `slack` must be empty or hold n-1
/// non-negative entries.
std::vector<Time> gen_sparse(std::int64_t n, Cost K, std::span<const Time> slack = {});

/// r_1 = 0, gaps uniform on {1, ..., p}.
std::vector<Time> gen_pbounded_uniform(std::int64_t n, Time p, std::uint64_t seed);

/// r_j = X_1 + ... + X_j with X_j geometric on {1, 2, ...}:
/// X = max(1, ceil(ln U / ln(1 - beta))) for U uniform in (0, 1), one draw
/// per gap. The first release is X_1, not 0.
std::vector<Time> gen_geometric(std::int64_t n, double beta, std::uint64_t seed);

Instance generate(const GenSpec &spec);

} // namespace jrpsched
