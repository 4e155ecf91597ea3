#include "aisfilter/classifier.hpp"

#include <algorithm>


namespace ais {

namespace {

// Scores one vector against a detector population serially; kept exception
// free after the caller's first affinity call has validated compatibility.
struct SetScore {
    double max_affinity = 0.0;
    std::vector<std::string> matched_ids;
};

SetScore score_set(const DetectorSet& set, const FeatureVector& v) {
    SetScore s;
    for (const auto& d : set.detectors) {
        const double a = affinity(d.center, v, set.rule);
        s.max_affinity = std::max(s.max_affinity, a);
        if (a > d.effective_threshold(set.rule)) s.matched_ids.push_back(d.id);
    }
    return s;
}

Decision decide_improved(const CombinedDetector& cd, const FeatureVector& v) {
    SetScore spam = score_set(cd.spam_set, v);
    SetScore nonspam = score_set(cd.nonspam_set, v);
    Decision d;
    d.spam_score = spam.max_affinity;
    d.nonspam_score = nonspam.max_affinity;
    d.matched_spam_ids = std::move(spam.matched_ids);
    d.matched_nonspam_ids = std::move(nonspam.matched_ids);
    d.label = (d.spam_score > cd.spam_set.rule.theta && d.spam_score > d.nonspam_score)
                  ? Class::Spam
                  : Class::NonSpam;
    return d;
}

Decision decide_baseline(const DetectorSet& spam_set, const FeatureVector& v) {
    SetScore spam = score_set(spam_set, v);
    Decision d;
    d.spam_score = spam.max_affinity;
    d.nonspam_score = 0.0;
    d.matched_spam_ids = std::move(spam.matched_ids);
    d.label = d.spam_score > spam_set.rule.theta ? Class::Spam : Class::NonSpam;
    return d;
}

void validate_compat(const DetectorSet& set, const FeatureVector& v) {
    if (!set.detectors.empty()) (void)affinity(set.detectors[0].center, v, set.rule);
}

// Each batch element scans whole detector populations, so parallelism pays
// off at much smaller counts than in the flat kernels.
constexpr std::size_t kBatchGrain = 64;

}  // namespace

Decision classify_improved(const CombinedDetector& cd, const FeatureVector& v) {
    return decide_improved(cd, v);
}

Decision classify_baseline(const DetectorSet& spam_set, const FeatureVector& v) {
    return decide_baseline(spam_set, v);
}

std::vector<Decision> classify_improved_batch_serial(const CombinedDetector& cd,
                                                     std::span<const LabeledSample> samples) {
    std::vector<Decision> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out[i] = decide_improved(cd, samples[i].vector);
    }
    return out;
}

std::vector<Decision> classify_improved_batch(const CombinedDetector& cd,
                                              std::span<const LabeledSample> samples) {
    if (samples.size() < kBatchGrain) return classify_improved_batch_serial(cd, samples);
    std::vector<Decision> out(samples.size());
    validate_compat(cd.spam_set, samples[0].vector);
    validate_compat(cd.nonspam_set, samples[0].vector);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = decide_improved(cd, samples[k].vector);
    }
    return out;
}

std::vector<Decision> classify_baseline_batch_serial(const DetectorSet& spam_set,
                                                     std::span<const LabeledSample> samples) {
    std::vector<Decision> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out[i] = decide_baseline(spam_set, samples[i].vector);
    }
    return out;
}

std::vector<Decision> classify_baseline_batch(const DetectorSet& spam_set,
                                              std::span<const LabeledSample> samples) {
    if (samples.size() < kBatchGrain) return classify_baseline_batch_serial(spam_set, samples);
    std::vector<Decision> out(samples.size());
    validate_compat(spam_set, samples[0].vector);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = decide_baseline(spam_set, samples[k].vector);
    }
    return out;
}

CorrectionResult correct_error(const CombinedDetector& cd, const LabeledSample& sample,
                               const std::vector<LabeledSample>& opposite_train) {
    CorrectionResult result;
    DetectorSet spam_set = cd.spam_set;
    DetectorSet nonspam_set = cd.nonspam_set;
    DetectorSet& target = sample.label == Class::Spam ? spam_set : nonspam_set;

    result.outcome = add_detector_from_sample(target, sample, opposite_train);
    if (result.outcome != AddOutcome::Accepted) {
        result.combined = cd;  // no-op: decisions stay exactly as they were
        return result;
    }

    result.combined = build_combined(spam_set, nonspam_set, cd.cross_theta);
    result.newly_pruned = result.combined.pruned_ids;
    // Keep the full pruning history across corrections.
    result.combined.pruned_ids = cd.pruned_ids;
    result.combined.pruned_ids.insert(result.combined.pruned_ids.end(),
                                      result.newly_pruned.begin(), result.newly_pruned.end());
    return result;
}

}  // namespace ais
