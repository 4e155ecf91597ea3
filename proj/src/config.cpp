#include "aisfilter/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "aisfilter/errors.hpp"

namespace ais {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

}  // namespace

void Config::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
    if (!(tau >= 0.0)) throw ConfigError("tau must be >= 0");
    if (cross_theta && !(*cross_theta >= 0.0 && *cross_theta <= 1.0)) {
        throw ConfigError("cross_theta must lie in [0, 1]");
    }
    if (!(min_separation >= 0.0)) throw ConfigError("min_separation must be >= 0");
    if (target_count < 1) throw ConfigError("target_count must be >= 1");
    if (max_attempts < target_count) throw ConfigError("max_attempts must be >= target_count");
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        throw ConfigError("split_ratio must lie strictly between 0 and 1");
    }
}

Config parse_config(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "theta") {
            config.theta = parse_double(key, value);
        } else if (key == "tau") {
            config.tau = parse_double(key, value);
        } else if (key == "cross_theta") {
            config.cross_theta = parse_double(key, value);
        } else if (key == "min_separation") {
            config.min_separation = parse_double(key, value);
        } else if (key == "target_count") {
            config.target_count = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "max_attempts") {
            config.max_attempts = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "split_ratio") {
            config.split_ratio = parse_double(key, value);
        } else if (key == "seed") {
            config.seed = parse_uint(key, value);
        } else if (key == "mode") {
            if (value == "token") {
                config.mode = MatchMode::TokenOverlap;
            } else if (value == "numeric") {
                config.mode = MatchMode::AttributeInterval;
            } else {
                throw ConfigError("mode must be 'token' or 'numeric', got '" + value + "'");
            }
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace ais
