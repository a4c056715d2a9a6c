#pragma once

#include <span>
#include <string>
#include <string_view>

#include "jrpsched/core_model.hpp"

namespace jrpsched {

// Shortest round-trip decimal form; identical on every platform with a
// conforming std::to_chars.
std::string format_double(double value);

std::string join(std::span<const Time> values, std::string_view sep);

} // namespace jrpsched
