#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aisfilter/affinity.hpp"
#include "aisfilter/detectors.hpp"
#include "aisfilter/feature.hpp"

// Data-parallel inner loops, each in an OpenMP flavor and a serial reference
// flavor. Both flavors are bit-identical in output (boolean OR, integer
// counts, per-index writes, and max over finite doubles are all
// schedule-independent), so tests compare them directly and callers get
// deterministic results at any thread count. The bench tool measures the
// speedup across sizes.
namespace ais::kernels {

// Below this many elements the parallel entry points run serially: the
// fork/join cost outweighs 57-dim affinity work (see bench_kernels).
inline constexpr std::size_t kParallelGrain = 256;

// True when the candidate matches (affinity > threshold) at least one sample.
bool any_match_serial(const FeatureVector& candidate, std::span<const LabeledSample> samples,
                      const MatchRule& rule, double threshold);
bool any_match(const FeatureVector& candidate, std::span<const LabeledSample> samples,
               const MatchRule& rule, double threshold);

// Affinity of one vector against every detector, in detector order.
std::vector<double> affinities_serial(const FeatureVector& v,
                                      std::span<const Detector> detectors,
                                      const MatchRule& rule);
std::vector<double> affinities(const FeatureVector& v, std::span<const Detector> detectors,
                               const MatchRule& rule);

// Max affinity of one vector over a detector population; 0 when empty.
double max_affinity_serial(const FeatureVector& v, std::span<const Detector> detectors,
                           const MatchRule& rule);
double max_affinity(const FeatureVector& v, std::span<const Detector> detectors,
                    const MatchRule& rule);

}  // namespace ais::kernels
