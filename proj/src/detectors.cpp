#include "aisfilter/detectors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "aisfilter/errors.hpp"
#include "aisfilter/kernels.hpp"
#include "aisfilter/rng.hpp"

namespace ais {

namespace {

// Spreading gate: candidate must keep min_separation to every accepted center.
bool too_close(const FeatureVector& candidate, const std::vector<Detector>& accepted,
               const MatchRule& rule) {
    for (const auto& d : accepted) {
        if (center_distance(candidate, d.center, rule) < rule.min_separation) return true;
    }
    return false;
}

std::string make_id(Class cls, std::size_t seq) {
    return std::string(to_string(cls)) + "-" + std::to_string(seq);
}

// Smallest sequence number not taken by an existing id, so ids stay unique
// after pruning and retraining.
std::size_t next_free_seq(const std::vector<Detector>& detectors) {
    std::size_t next = 0;
    for (const auto& d : detectors) {
        const auto dash = d.id.rfind('-');
        if (dash == std::string::npos) continue;
        const std::size_t seq = std::strtoull(d.id.c_str() + dash + 1, nullptr, 10);
        next = std::max(next, seq + 1);
    }
    return next;
}

}  // namespace

bool detector_matches(const Detector& d, const FeatureVector& v, const MatchRule& rule) {
    return affinity(d.center, v, rule) > d.effective_threshold(rule);
}

DetectorSet generate_detector_set(const std::vector<LabeledSample>& own,
                                  const std::vector<LabeledSample>& opposite, Class cls,
                                  const MatchRule& rule, std::size_t target_count,
                                  std::size_t max_attempts, std::uint64_t seed,
                                  const Normalization& normalization) {
    if (own.empty()) {
        throw InsufficientSamples(std::string("no ") + to_string(cls) +
                                  " training samples to draw candidates from");
    }

    DetectorSet set;
    set.rule = rule;
    set.cls = cls;
    set.normalization = normalization;

    Rng rng(derive_seed(seed, cls == Class::Spam ? 0x4745'4e53ULL : 0x4745'4e4eULL));
    std::size_t next_id = 0;
    while (set.stats.attempts < max_attempts && set.detectors.size() < target_count) {
        ++set.stats.attempts;
        const LabeledSample& pick = own[rng.bounded(own.size())];

        if (kernels::any_match(pick.vector, opposite, rule, rule.theta)) {
            ++set.stats.rejected_censoring;
            continue;
        }
        if (too_close(pick.vector, set.detectors, rule)) {
            ++set.stats.rejected_spreading;
            continue;
        }
        set.detectors.push_back(
            Detector{pick.vector, std::nullopt, cls, 0, 0, make_id(cls, next_id++)});
    }
    set.stats.accepted = set.detectors.size();

    if (set.detectors.empty()) {
        throw NoDetectorsGenerated(std::string("no ") + to_string(cls) +
                                   " candidate survived censoring within " +
                                   std::to_string(max_attempts) + " attempts");
    }
    return set;
}

std::vector<AffinityRecord> update_counters(DetectorSet& set, const FeatureVector& v,
                                            const std::string& v_id) {
    const auto affs = kernels::affinities(v, set.detectors, set.rule);
    std::vector<AffinityRecord> matches;
    for (std::size_t i = 0; i < set.detectors.size(); ++i) {
        Detector& d = set.detectors[i];
        ++d.detected_count;
        if (affs[i] > d.effective_threshold(set.rule)) {
            ++d.matched_count;
            matches.push_back(AffinityRecord{d.id, v_id, affs[i]});
        }
    }
    return matches;
}

CombinedDetector build_combined(const DetectorSet& spam_set, const DetectorSet& nonspam_set,
                                double cross_theta) {
    CombinedDetector cd;
    cd.nonspam_set = nonspam_set;
    cd.cross_theta = cross_theta;
    cd.spam_set = spam_set;
    cd.spam_set.detectors.clear();

    for (const auto& d : spam_set.detectors) {
        const double cross =
            kernels::max_affinity(d.center, nonspam_set.detectors, spam_set.rule);
        if (cross > cross_theta) {
            cd.pruned_ids.push_back(d.id);
        } else {
            cd.spam_set.detectors.push_back(d);
        }
    }
    if (cd.spam_set.detectors.empty()) throw EmptySpamSet();
    return cd;
}

AddOutcome add_detector_from_sample(DetectorSet& set, const LabeledSample& sample,
                                    const std::vector<LabeledSample>& opposite) {
    if (kernels::any_match(sample.vector, opposite, set.rule, set.rule.theta)) {
        return AddOutcome::RejectedCensoring;
    }
    if (too_close(sample.vector, set.detectors, set.rule)) {
        return AddOutcome::RejectedSpreading;
    }
    set.detectors.push_back(Detector{sample.vector, std::nullopt, set.cls, 0, 0,
                                     make_id(set.cls, next_free_seq(set.detectors))});
    return AddOutcome::Accepted;
}

}  // namespace ais
