#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aisfilter/affinity.hpp"

namespace ais {

// Run configuration. File format is flat key=value text with '#' comments;
// keys match the field names exactly; absent keys keep their defaults.
struct Config {
    double theta = 0.5;
    double tau = 0.1;
    std::optional<double> cross_theta;  // defaults to theta when unset
    double min_separation = 0.05;
    std::size_t target_count = 100;
    std::size_t max_attempts = 5000;
    double split_ratio = 0.6;
    std::uint64_t seed = 1;
    MatchMode mode = MatchMode::AttributeInterval;

    double cross() const { return cross_theta.value_or(theta); }
    MatchRule rule() const { return MatchRule{mode, theta, tau, min_separation}; }

    // Throws ConfigError when any field is out of its documented range.
    void validate() const;
};

Config load_config(const std::string& path);
Config parse_config(const std::string& text);

}  // namespace ais
