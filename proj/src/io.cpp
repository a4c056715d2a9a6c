#include "jrpsched/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include <json.hpp>

namespace jrpsched::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view token, std::string_view what) {
    token = trim(token);
    std::int64_t value = 0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        const auto code = ec == std::errc::result_out_of_range ? ErrorCode::overflow : ErrorCode::parse_error;
        throw Error(code, "cannot parse " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Instance parse_instance_line(std::string_view line) {
    line = trim(line);
    const auto sep = line.find(';');
    if (sep == std::string_view::npos) {
        throw Error(ErrorCode::parse_error, "instance line must look like 'K;r_1,...,r_n'");
    }
    const Cost K = parse_int(line.substr(0, sep), "replenishment cost");
    std::vector<Time> releases;
    auto rest = line.substr(sep + 1);
    if (!trim(rest).empty()) {
        while (true) {
            const auto comma = rest.find(',');
            releases.push_back(parse_int(rest.substr(0, comma), "release date"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return validate_instance(std::move(releases), K);
}

std::string format_instance_line(const Instance &inst) {
    std::string out = std::to_string(inst.replenishment_cost()) + ";";
    bool first = true;
    for (Time r : inst.releases()) {
        if (!first) out += ',';
        out += std::to_string(r);
        first = false;
    }
    return out;
}

std::vector<Instance> read_instances(std::istream &in) {
    std::vector<Instance> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.push_back(parse_instance_line(t));
    }
    return out;
}

std::vector<Instance> read_instances_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open instance file '" + path + "'");
    }
    return read_instances(in);
}

std::string solution_to_json(const Solution &sol) {
    nlohmann::json j;
    j["starts"] = sol.starts;
    j["replenishments"] = sol.replenishments;
    return j.dump();
}

Solution solution_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Solution sol;
        sol.starts = j.at("starts").get<std::vector<Time>>();
        sol.replenishments = j.at("replenishments").get<std::vector<Time>>();
        return sol;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::parse_error, std::string("bad solution record: ") + e.what());
    }
}

} // namespace jrpsched::io
