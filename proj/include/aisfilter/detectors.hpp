#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aisfilter/affinity.hpp"
#include "aisfilter/corpus.hpp"
#include "aisfilter/feature.hpp"

namespace ais {

struct Detector {
    FeatureVector center;
    std::optional<double> radius_override;  // per-detector threshold, else rule.theta
    Class cls = Class::Spam;
    std::uint64_t matched_count = 0;
    std::uint64_t detected_count = 0;
    std::string id;

    double effective_threshold(const MatchRule& rule) const {
        return radius_override ? *radius_override : rule.theta;
    }
};

// An input "matches" a detector when its affinity to the center strictly
// exceeds the detector's threshold. Equality is a non-match, which biases ties
// toward non-spam.
bool detector_matches(const Detector& d, const FeatureVector& v, const MatchRule& rule);

// Candidate rejection bookkeeping from one generation run.
struct GenerationStats {
    std::size_t attempts = 0;
    std::size_t accepted = 0;
    std::size_t rejected_censoring = 0;   // matched an opposite-class sample
    std::size_t rejected_spreading = 0;   // too close to an accepted detector
};

// Censored detector population of one class.
struct DetectorSet {
    std::vector<Detector> detectors;
    MatchRule rule;
    Class cls = Class::Spam;
    Normalization normalization;  // corpus normalization in force at build time
    GenerationStats stats;

    std::size_t size() const { return detectors.size(); }
};

enum class AddOutcome : std::uint8_t { Accepted, RejectedCensoring, RejectedSpreading };

inline const char* to_string(AddOutcome o) {
    switch (o) {
        case AddOutcome::Accepted: return "accepted";
        case AddOutcome::RejectedCensoring: return "rejected (matches opposite-class sample)";
        default: return "rejected (too close to an existing detector)";
    }
}

// The pruned spam population paired with the non-spam population, acting as a
// single classifier.
struct CombinedDetector {
    DetectorSet spam_set;
    DetectorSet nonspam_set;
    std::vector<std::string> pruned_ids;  // spam detectors removed during combination
    double cross_theta = 0.5;
};

// Negative-selection generation. Candidates are drawn (seeded, with
// replacement) from own-class training vectors; a candidate is rejected if it
// matches any opposite-class sample or sits closer than rule.min_separation to
// an already-accepted detector. Stops at target_count accepted or max_attempts
// drawn. Throws InsufficientSamples / NoDetectorsGenerated.
DetectorSet generate_detector_set(const std::vector<LabeledSample>& own,
                                  const std::vector<LabeledSample>& opposite, Class cls,
                                  const MatchRule& rule, std::size_t target_count,
                                  std::size_t max_attempts, std::uint64_t seed,
                                  const Normalization& normalization = {});

// Bumps detected_count on every detector and matched_count on the ones the
// vector matches. Returns one affinity record per matching detector.
std::vector<AffinityRecord> update_counters(DetectorSet& set, const FeatureVector& v,
                                            const std::string& v_id = "");

// Removes every spam detector whose affinity to any non-spam detector exceeds
// cross_theta; the removed ids land in pruned_ids. Throws EmptySpamSet when
// nothing survives.
CombinedDetector build_combined(const DetectorSet& spam_set, const DetectorSet& nonspam_set,
                                double cross_theta);

// Retraining hook: runs the sample through the same censoring and spreading
// gates as generation and appends it on success. Rejection is an outcome, not
// an error.
AddOutcome add_detector_from_sample(DetectorSet& set, const LabeledSample& sample,
                                    const std::vector<LabeledSample>& opposite);

}  // namespace ais
