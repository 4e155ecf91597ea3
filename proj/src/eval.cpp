#include "aisfilter/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "aisfilter/errors.hpp"
#include "aisfilter/rng.hpp"

namespace ais {

namespace {

// Matches the published false-rate figures this sweep is compared against
// (best / average / worst, percent).
constexpr double kReferenceImproved[3] = {1.2, 1.6, 2.4};
constexpr double kReferenceBaseline[3] = {3.0, 3.8, 4.8};

std::string format_rate(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

MethodSummary summarize(const std::vector<RunMetrics>& runs, Method method) {
    MethodSummary s;
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : runs) {
        if (r.method != method) continue;
        const double fp = r.fp_rate_pct;
        if (n == 0) {
            s.best_fp = s.worst_fp = fp;
        } else {
            s.best_fp = std::min(s.best_fp, fp);
            s.worst_fp = std::max(s.worst_fp, fp);
        }
        sum += fp;
        ++n;
    }
    if (n > 0) s.avg_fp = sum / static_cast<double>(n);
    return s;
}

}  // namespace

ConfusionCounts confusion(std::span<const std::pair<Decision, Class>> decisions) {
    if (decisions.empty()) throw EmptyInput("confusion counts need at least one decision");
    ConfusionCounts c;
    for (const auto& [decision, truth] : decisions) {
        if (truth == Class::Spam) {
            decision.label == Class::Spam ? ++c.tp : ++c.fn;
        } else {
            decision.label == Class::Spam ? ++c.fp : ++c.tn;
        }
    }
    return c;
}

double accuracy(const ConfusionCounts& c) {
    if (c.total() == 0) throw DivisionByZero("accuracy needs s + ns > 0");
    return static_cast<double>((c.tp + c.tn) * 100) / static_cast<double>(c.total());
}

double fp_rate(const ConfusionCounts& c) {
    if (c.ns() == 0) throw DivisionByZero("fp_rate needs ns > 0");
    return static_cast<double>(c.fp * 100) / static_cast<double>(c.ns());
}

double fn_rate(const ConfusionCounts& c) {
    if (c.s() == 0) throw DivisionByZero("fn_rate needs s > 0");
    return static_cast<double>(c.fn * 100) / static_cast<double>(c.s());
}

RunMetrics make_metrics(std::uint64_t seed, Method method, const ConfusionCounts& c,
                        std::size_t spam_detectors, std::size_t nonspam_detectors) {
    RunMetrics m;
    m.seed = seed;
    m.method = method;
    m.counts = c;
    m.accuracy_pct = accuracy(c);
    m.fp_rate_pct = fp_rate(c);
    m.fn_rate_pct = fn_rate(c);
    m.spam_detectors = spam_detectors;
    m.nonspam_detectors = nonspam_detectors;
    return m;
}

ExperimentReport run_experiment(const std::vector<LabeledSample>& corpus, const Config& config,
                                const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw EmptyInput("run_experiment needs at least one seed");
    config.validate();

    ExperimentReport report;
    report.seeds = seeds;
    const MatchRule rule = config.rule();

    for (const std::uint64_t seed : seeds) {
        SplitCorpus split = split_train_test(corpus, config.split_ratio, seed);

        Normalization norm;
        if (config.mode == MatchMode::AttributeInterval) {
            norm = Normalization::fit(split.train);
            norm.apply_in_place(split.train);
            norm.apply_in_place(split.test);
        }

        std::vector<LabeledSample> spam_train;
        std::vector<LabeledSample> nonspam_train;
        for (const auto& s : split.train) {
            (s.label == Class::Spam ? spam_train : nonspam_train).push_back(s);
        }

        const DetectorSet spam_set =
            generate_detector_set(spam_train, nonspam_train, Class::Spam, rule,
                                  config.target_count, config.max_attempts,
                                  derive_seed(seed, 1), norm);
        const DetectorSet nonspam_set =
            generate_detector_set(nonspam_train, spam_train, Class::NonSpam, rule,
                                  config.target_count, config.max_attempts,
                                  derive_seed(seed, 2), norm);
        const CombinedDetector combined = build_combined(spam_set, nonspam_set, config.cross());

        const auto improved = classify_improved_batch(combined, split.test);
        const auto baseline = classify_baseline_batch(spam_set, split.test);

        std::vector<std::pair<Decision, Class>> improved_pairs;
        std::vector<std::pair<Decision, Class>> baseline_pairs;
        improved_pairs.reserve(split.test.size());
        baseline_pairs.reserve(split.test.size());
        for (std::size_t i = 0; i < split.test.size(); ++i) {
            improved_pairs.emplace_back(improved[i], split.test[i].label);
            baseline_pairs.emplace_back(baseline[i], split.test[i].label);
        }

        report.runs.push_back(make_metrics(seed, Method::Improved, confusion(improved_pairs),
                                           combined.spam_set.size(),
                                           combined.nonspam_set.size()));
        report.runs.push_back(make_metrics(seed, Method::Baseline, confusion(baseline_pairs),
                                           spam_set.size(), 0));
    }

    report.improved = summarize(report.runs, Method::Improved);
    report.baseline = summarize(report.runs, Method::Baseline);
    return report;
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
    out << "seed,method,tp,fn,fp,tn,accuracy_pct,fp_rate_pct,fn_rate_pct\n";
    for (const auto& r : report.runs) {
        out << r.seed << ',' << to_string(r.method) << ',' << r.counts.tp << ',' << r.counts.fn
            << ',' << r.counts.fp << ',' << r.counts.tn << ',' << format_rate(r.accuracy_pct)
            << ',' << format_rate(r.fp_rate_pct) << ',' << format_rate(r.fn_rate_pct) << '\n';
    }
}

void write_report_json(const ExperimentReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["seeds"] = report.seeds;
    for (const auto* side : {&report.improved, &report.baseline}) {
        nlohmann::ordered_json m;
        m["best_fp"] = side->best_fp;
        m["avg_fp"] = side->avg_fp;
        m["worst_fp"] = side->worst_fp;
        j[side == &report.improved ? "improved" : "baseline"] = std::move(m);
    }
    j["paper_improved"] = kReferenceImproved;
    j["paper_baseline"] = kReferenceBaseline;
    out << j.dump(2) << '\n';
}

void print_report_table(const ExperimentReport& report, std::ostream& out) {
    char line[160];
    out << "false-positive rate (%)   best     avg   worst\n";
    std::snprintf(line, sizeof(line), "  improved            %7.3f %7.3f %7.3f\n",
                  report.improved.best_fp, report.improved.avg_fp, report.improved.worst_fp);
    out << line;
    std::snprintf(line, sizeof(line), "  baseline            %7.3f %7.3f %7.3f\n",
                  report.baseline.best_fp, report.baseline.avg_fp, report.baseline.worst_fp);
    out << line;
    std::snprintf(line, sizeof(line), "  reference improved  %7.3f %7.3f %7.3f\n",
                  kReferenceImproved[0], kReferenceImproved[1], kReferenceImproved[2]);
    out << line;
    std::snprintf(line, sizeof(line), "  reference baseline  %7.3f %7.3f %7.3f\n",
                  kReferenceBaseline[0], kReferenceBaseline[1], kReferenceBaseline[2]);
    out << line;

    out << "\nper-seed fp rate (%)\n";
    out << "  seed    improved    baseline   spam-dets  nonspam-dets  pruned-to\n";
    for (std::size_t i = 0; i + 1 < report.runs.size(); i += 2) {
        const RunMetrics& imp = report.runs[i];
        const RunMetrics& base = report.runs[i + 1];
        std::snprintf(line, sizeof(line), "  %-6llu %9.3f %11.3f %9zu %13zu %10zu\n",
                      static_cast<unsigned long long>(imp.seed), imp.fp_rate_pct,
                      base.fp_rate_pct, base.spam_detectors, imp.nonspam_detectors,
                      imp.spam_detectors);
        out << line;
    }
}

}  // namespace ais
