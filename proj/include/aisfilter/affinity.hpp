#pragma once

#include <string>

#include "aisfilter/feature.hpp"

namespace ais {

enum class MatchMode : std::uint8_t { TokenOverlap, AttributeInterval };

inline const char* to_string(MatchMode m) {
    return m == MatchMode::TokenOverlap ? "token" : "numeric";
}

// Matching parameters shared by a detector population.
struct MatchRule {
    MatchMode mode = MatchMode::AttributeInterval;
    double theta = 0.5;           // affinity threshold for a detector hit
    double tau = 0.1;             // per-attribute tolerance, normalized units
    double min_separation = 0.05; // coverage-spreading distance between centers
};

// One entry of the affinity-record set: who was compared with whom and how
// similar they were.
struct AffinityRecord {
    std::string x_id;
    std::string y_id;
    double affinity = 0.0;
};

// Normalized similarity in [0, 1]: matching elements divided by the shorter
// length. Token mode counts multiset-intersection matches; numeric mode counts
// attributes within tau of each other. Symmetric; throws on empty vectors,
// mixed representations, or numeric length mismatch.
double affinity(const FeatureVector& x, const FeatureVector& y, const MatchRule& rule);

// Distance companion to affinity, in [0, 1], used by the coverage-spreading
// gate. Token mode: 1 - affinity. Numeric mode: Euclidean distance scaled by
// 1/sqrt(dim) so normalized vectors stay inside [0, 1].
double center_distance(const FeatureVector& a, const FeatureVector& b, const MatchRule& rule);

}  // namespace ais
