// Compares the serial reference kernels against the OpenMP ones across
// workload sizes. Outputs must agree exactly; the point here is the
// wall-clock ratio and where the parallel path starts to pay for its
// fork/join overhead (entry points below kParallelGrain fall back to the
// serial reference, so small sizes show ~1x by design).

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aisfilter/classifier.hpp"
#include "aisfilter/detectors.hpp"
#include "aisfilter/kernels.hpp"
#include "aisfilter/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kDim = 57;

ais::NumericVector random_vector(ais::Rng& rng) {
    ais::NumericVector v(kDim);
    for (auto& x : v) x = rng.real();
    return v;
}

std::vector<ais::LabeledSample> random_samples(ais::Rng& rng, std::size_t n) {
    std::vector<ais::LabeledSample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        samples.push_back(ais::LabeledSample{ais::FeatureVector{random_vector(rng)},
                                             i % 2 ? ais::Class::Spam : ais::Class::NonSpam,
                                             "s" + std::to_string(i)});
    }
    return samples;
}

ais::DetectorSet random_detectors(ais::Rng& rng, const ais::MatchRule& rule, std::size_t n,
                                  ais::Class cls) {
    ais::DetectorSet set;
    set.rule = rule;
    set.cls = cls;
    for (std::size_t i = 0; i < n; ++i) {
        set.detectors.push_back(ais::Detector{ais::FeatureVector{random_vector(rng)},
                                              std::nullopt, cls, 0, 0,
                                              std::string(to_string(cls)) + "-" +
                                                  std::to_string(i)});
    }
    return set;
}

template <typename F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
}

void report(const char* name, std::size_t size, double serial_s, double parallel_s) {
    std::printf("%-22s n=%-6zu serial %9.3f ms   openmp %9.3f ms   speedup %5.2fx\n", name,
                size, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main() {
    constexpr int kRepeats = 5;
    ais::Rng rng(42);
    const ais::MatchRule rule;  // numeric defaults

#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; both columns run serially\n\n");
#endif

    volatile std::size_t sink = 0;

    // Censoring scan: candidates against a sample population of varying size.
    for (const std::size_t n : {200UL, 2000UL, 20000UL}) {
        const auto samples = random_samples(rng, n);
        std::vector<ais::FeatureVector> candidates;
        for (int i = 0; i < 100; ++i) candidates.push_back(ais::FeatureVector{random_vector(rng)});
        const double serial = time_best_of(kRepeats, [&] {
            std::size_t hits = 0;
            for (const auto& c : candidates) {
                hits += ais::kernels::any_match_serial(c, samples, rule, rule.theta);
            }
            sink = hits;
        });
        const double parallel = time_best_of(kRepeats, [&] {
            std::size_t hits = 0;
            for (const auto& c : candidates) {
                hits += ais::kernels::any_match(c, samples, rule, rule.theta);
            }
            sink = hits;
        });
        report("censoring scan", n, serial, parallel);
    }
    std::printf("\n");

    // Max affinity of single vectors over detector populations.
    for (const std::size_t n : {100UL, 1000UL, 10000UL}) {
        const auto detectors = random_detectors(rng, rule, n, ais::Class::Spam);
        std::vector<ais::FeatureVector> probes;
        for (int i = 0; i < 100; ++i) probes.push_back(ais::FeatureVector{random_vector(rng)});
        const double serial = time_best_of(kRepeats, [&] {
            double acc = 0.0;
            for (const auto& p : probes) {
                acc += ais::kernels::max_affinity_serial(p, detectors.detectors, rule);
            }
            sink = static_cast<std::size_t>(acc);
        });
        const double parallel = time_best_of(kRepeats, [&] {
            double acc = 0.0;
            for (const auto& p : probes) {
                acc += ais::kernels::max_affinity(p, detectors.detectors, rule);
            }
            sink = static_cast<std::size_t>(acc);
        });
        report("max affinity", n, serial, parallel);
    }
    std::printf("\n");

    // Batch classification with training-run-sized detector sets.
    const auto spam_set = random_detectors(rng, rule, 100, ais::Class::Spam);
    const auto nonspam_set = random_detectors(rng, rule, 100, ais::Class::NonSpam);
    const ais::CombinedDetector combined{spam_set, nonspam_set, {}, rule.theta};
    for (const std::size_t n : {200UL, 2000UL, 20000UL}) {
        const auto batch = random_samples(rng, n);
        const double serial = time_best_of(kRepeats, [&] {
            sink = ais::classify_improved_batch_serial(combined, batch).size();
        });
        const double parallel = time_best_of(kRepeats, [&] {
            sink = ais::classify_improved_batch(combined, batch).size();
        });
        report("batch classification", n, serial, parallel);
    }

    (void)sink;
    return 0;
}
