#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "aisfilter/classifier.hpp"
#include "aisfilter/config.hpp"

namespace ais {

// Spam is the positive class: tp = spam classified spam, fp = non-spam
// classified spam.
struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fn = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;

    std::uint64_t s() const { return tp + fn; }    // total true spam
    std::uint64_t ns() const { return fp + tn; }   // total true non-spam
    std::uint64_t total() const { return s() + ns(); }
};

ConfusionCounts confusion(std::span<const std::pair<Decision, Class>> decisions);

// (tp + tn) / (s + ns) x 100, computed numerator-first so the result is the
// correctly rounded value of the exact rational.
double accuracy(const ConfusionCounts& c);
double fp_rate(const ConfusionCounts& c);  // fp / ns x 100
double fn_rate(const ConfusionCounts& c);  // fn / s x 100

enum class Method : std::uint8_t { Improved, Baseline };

inline const char* to_string(Method m) {
    return m == Method::Improved ? "improved" : "baseline";
}

struct RunMetrics {
    std::uint64_t seed = 0;
    Method method = Method::Improved;
    ConfusionCounts counts;
    double accuracy_pct = 0.0;
    double fp_rate_pct = 0.0;
    double fn_rate_pct = 0.0;
    std::size_t spam_detectors = 0;
    std::size_t nonspam_detectors = 0;
};

struct MethodSummary {
    double best_fp = 0.0;   // minimum over runs
    double avg_fp = 0.0;    // arithmetic mean
    double worst_fp = 0.0;  // maximum over runs
};

struct ExperimentReport {
    std::vector<RunMetrics> runs;  // improved then baseline, per seed, in seed order
    MethodSummary improved;
    MethodSummary baseline;
    std::vector<std::uint64_t> seeds;
};

RunMetrics make_metrics(std::uint64_t seed, Method method, const ConfusionCounts& c,
                        std::size_t spam_detectors, std::size_t nonspam_detectors);

// Full seed sweep: per seed, split / generate both sets / combine, then
// classify the test split with the improved rule and with the baseline rule
// over the unpruned spam set. Deterministic in (corpus, config, seeds).
ExperimentReport run_experiment(const std::vector<LabeledSample>& corpus, const Config& config,
                                const std::vector<std::uint64_t>& seeds);

// Report emission. CSV columns: seed, method, tp, fn, fp, tn, accuracy_pct,
// fp_rate_pct, fn_rate_pct. The JSON summary carries best/avg/worst per method
// plus the static reference rates the sweep is normally compared against.
void write_report_csv(const ExperimentReport& report, std::ostream& out);
void write_report_json(const ExperimentReport& report, std::ostream& out);
void print_report_table(const ExperimentReport& report, std::ostream& out);

}  // namespace ais
