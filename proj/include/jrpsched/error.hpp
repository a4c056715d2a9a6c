#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jrpsched {

enum class ErrorCode {
    empty_instance,
    duplicate_release,
    non_increasing_release,
    negative_release,
    invalid_cost,
    infeasible_replenishments,
    overlap,
    start_before_release,
    uncovered_job,
    malformed_solution,
    not_p_bounded,
    invalid_argument,
    overflow,
    size_cap_exceeded,
    protocol_violation,
    input_order,
    divergence,
    parse_error,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `job()` carries the offending job
// index (0-based, release order) when the error is about a single job.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message, std::optional<std::size_t> job = std::nullopt)
        : std::runtime_error(message), code_(code), job_(job) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> job() const noexcept { return job_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> job_;
};

// Overflow is reported, never wrapped.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorCode::overflow, "integer overflow in time/cost arithmetic");
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorCode::overflow, "integer overflow in time/cost arithmetic");
    }
    return out;
}

} // namespace jrpsched
