#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jrpsched/core_model.hpp"

namespace jrpsched::io {

// Instance text format, one instance per line: `K;r_1,r_2,...,r_n`.
// Blank lines and lines starting with '#' are skipped by read_instances().
Instance parse_instance_line(std::string_view line);
std::string format_instance_line(const Instance &inst);
std::vector<Instance> read_instances(std::istream &in);
std::vector<Instance> read_instances_file(const std::string &path);

// {"starts": [...], "replenishments": [...]}
std::string solution_to_json(const Solution &sol);
Solution solution_from_json(std::string_view text);

} // namespace jrpsched::io
