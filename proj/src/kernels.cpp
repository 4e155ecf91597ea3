#include "aisfilter/kernels.hpp"

#include <atomic>

// Each parallel kernel evaluates element 0 serially first: affinity() throws
// on incompatible vectors, and that must happen outside the omp region.
// Corpus and detector-set invariants make the collections homogeneous, so once
// element 0 passes, the remaining iterations cannot throw.
namespace ais::kernels {

bool any_match_serial(const FeatureVector& candidate, std::span<const LabeledSample> samples,
                      const MatchRule& rule, double threshold) {
    for (const auto& s : samples) {
        if (affinity(candidate, s.vector, rule) > threshold) return true;
    }
    return false;
}

bool any_match(const FeatureVector& candidate, std::span<const LabeledSample> samples,
               const MatchRule& rule, double threshold) {
    if (samples.size() < kParallelGrain) {
        return any_match_serial(candidate, samples, rule, threshold);
    }
    if (affinity(candidate, samples[0].vector, rule) > threshold) return true;

    std::atomic<bool> found{false};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;  // early exit
        if (affinity(candidate, samples[static_cast<std::size_t>(i)].vector, rule) > threshold) {
            found.store(true, std::memory_order_relaxed);
        }
    }
    return found.load();
}

std::vector<double> affinities_serial(const FeatureVector& v,
                                      std::span<const Detector> detectors,
                                      const MatchRule& rule) {
    std::vector<double> out(detectors.size());
    for (std::size_t i = 0; i < detectors.size(); ++i) {
        out[i] = affinity(v, detectors[i].center, rule);
    }
    return out;
}

std::vector<double> affinities(const FeatureVector& v, std::span<const Detector> detectors,
                               const MatchRule& rule) {
    if (detectors.size() < kParallelGrain) return affinities_serial(v, detectors, rule);
    std::vector<double> out(detectors.size());
    out[0] = affinity(v, detectors[0].center, rule);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(detectors.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = affinity(v, detectors[k].center, rule);
    }
    return out;
}

double max_affinity_serial(const FeatureVector& v, std::span<const Detector> detectors,
                           const MatchRule& rule) {
    double best = 0.0;
    for (const auto& d : detectors) {
        best = std::max(best, affinity(v, d.center, rule));
    }
    return best;
}

double max_affinity(const FeatureVector& v, std::span<const Detector> detectors,
                    const MatchRule& rule) {
    if (detectors.size() < kParallelGrain) return max_affinity_serial(v, detectors, rule);
    double best = affinity(v, detectors[0].center, rule);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(detectors.size());
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        const double a = affinity(v, detectors[static_cast<std::size_t>(i)].center, rule);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace ais::kernels
