#include "jrpsched/generators.hpp"

#include <cmath>
#include <string>

namespace jrpsched {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void require_n(std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "generator needs n >= 1");
}

} // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return splitmix64_mix(seed_ + counter_ * kGolden);
}

double CounterRng::next_open_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t CounterRng::next_below(std::uint64_t bound) {
    const auto wide = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_mix(splitmix64_mix(master) ^ (index * kGolden));
}

std::string_view to_string(GenKind kind) {
    switch (kind) {
    case GenKind::regular: return "regular";
    case GenKind::pregular: return "pregular";
    case GenKind::sparse: return "sparse";
    case GenKind::pbounded_uniform: return "pbounded_uniform";
    case GenKind::geometric: return "geometric";
    }
    return "unknown";
}

GenKind parse_gen_kind(std::string_view name) {
    for (GenKind k : {GenKind::regular, GenKind::pregular, GenKind::sparse, GenKind::pbounded_uniform,
                      GenKind::geometric}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorCode::invalid_argument, "unknown instance kind '" + std::string(name) + "'");
}

std::vector<Time> gen_pregular(std::int64_t n, Time p) {
    require_n(n);
    if (p < 1) throw Error(ErrorCode::invalid_argument, "p-regular input needs p >= 1");
    std::vector<Time> out(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = checked_mul(j, p);
    return out;
}

std::vector<Time> gen_sparse(std::int64_t n, Cost K, std::span<const Time> slack) {
    require_n(n);
    if (K < 1) throw Error(ErrorCode::invalid_cost, "sparse input needs K >= 1");
    if (!slack.empty() && static_cast<std::int64_t>(slack.size()) != n - 1) {
        throw Error(ErrorCode::invalid_argument, "sparse slack list must have n - 1 entries");
    }
    std::vector<Time> out{0};
    for (std::int64_t j = 1; j < n; ++j) {
        const Time extra = slack.empty() ? 0 : slack[static_cast<std::size_t>(j - 1)];
        if (extra < 0) throw Error(ErrorCode::invalid_argument, "sparse slack must be non-negative");
        out.push_back(checked_add(checked_add(out.back(), checked_mul(K, j)), extra));
    }
    return out;
}

std::vector<Time> gen_pbounded_uniform(std::int64_t n, Time p, std::uint64_t seed) {
    require_n(n);
    if (p < 1) throw Error(ErrorCode::invalid_argument, "p-bounded input needs p >= 1");
    CounterRng rng(seed);
    std::vector<Time> out{0};
    for (std::int64_t j = 1; j < n; ++j) {
        const Time gap = 1 + static_cast<Time>(rng.next_below(static_cast<std::uint64_t>(p)));
        out.push_back(checked_add(out.back(), gap));
    }
    return out;
}

std::vector<Time> gen_geometric(std::int64_t n, double beta, std::uint64_t seed) {
    require_n(n);
    if (!(beta > 0.0 && beta < 1.0)) {
        throw Error(ErrorCode::invalid_argument, "geometric parameter beta must lie in (0, 1)");
    }
    CounterRng rng(seed);
    const double log_fail = std::log1p(-beta);
    std::vector<Time> out;
    out.reserve(static_cast<std::size_t>(n));
    Time r = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        const double x = std::ceil(std::log(rng.next_open_unit()) / log_fail);
        if (!(x < 0x1.0p62)) throw Error(ErrorCode::overflow, "geometric gap out of range");
        r = checked_add(r, std::max<Time>(1, static_cast<Time>(x)));
        out.push_back(r);
    }
    return out;
}

Instance generate(const GenSpec &spec) {
    switch (spec.kind) {
    case GenKind::regular: return validate_instance(gen_pregular(spec.n, 1), spec.K);
    case GenKind::pregular: return validate_instance(gen_pregular(spec.n, spec.p), spec.K);
    case GenKind::sparse: return validate_instance(gen_sparse(spec.n, spec.K, spec.slack), spec.K);
    case GenKind::pbounded_uniform:
        return validate_instance(gen_pbounded_uniform(spec.n, spec.p, spec.seed), spec.K);
    case GenKind::geometric: return validate_instance(gen_geometric(spec.n, spec.beta, spec.seed), spec.K);
    }
    throw Error(ErrorCode::invalid_argument, "unknown instance kind");
}

} // namespace jrpsched
