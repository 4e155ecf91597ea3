#pragma once

#include <span>
#include <string>
#include <vector>

#include "aisfilter/detectors.hpp"

namespace ais {

struct Decision {
    Class label = Class::NonSpam;
    double spam_score = 0.0;     // max affinity to surviving spam detectors
    double nonspam_score = 0.0;  // max affinity to non-spam detectors
    std::vector<std::string> matched_spam_ids;
    std::vector<std::string> matched_nonspam_ids;
};

// Dual-set decision rule: Spam iff spam evidence clears the threshold AND
// beats the non-spam evidence. Ties go to non-spam.
Decision classify_improved(const CombinedDetector& cd, const FeatureVector& v);

// Single-set baseline: Spam iff max affinity over the spam set clears the
// threshold. No non-spam comparison; nonspam_score is reported as 0.
Decision classify_baseline(const DetectorSet& spam_set, const FeatureVector& v);

// Batch classification over many vectors, parallel across vectors with a
// serial reference for tests. Results are in input order.
std::vector<Decision> classify_improved_batch(const CombinedDetector& cd,
                                              std::span<const LabeledSample> samples);
std::vector<Decision> classify_improved_batch_serial(const CombinedDetector& cd,
                                                     std::span<const LabeledSample> samples);
std::vector<Decision> classify_baseline_batch(const DetectorSet& spam_set,
                                              std::span<const LabeledSample> samples);
std::vector<Decision> classify_baseline_batch_serial(const DetectorSet& spam_set,
                                                     std::span<const LabeledSample> samples);

struct CorrectionResult {
    CombinedDetector combined;
    AddOutcome outcome = AddOutcome::Accepted;
    std::vector<std::string> newly_pruned;  // pruned by the re-combination pass
};

// Manual retraining: inserts the misclassified sample into the set matching
// its label (same gates as generation), then re-runs cross-pruning so the
// combined-detector invariant holds again.
CorrectionResult correct_error(const CombinedDetector& cd, const LabeledSample& sample,
                               const std::vector<LabeledSample>& opposite_train);

}  // namespace ais
