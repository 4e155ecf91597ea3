#include "aisfilter/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aisfilter/classifier.hpp"
#include "aisfilter/corpus.hpp"
#include "aisfilter/detectors.hpp"
#include "aisfilter/errors.hpp"
#include "aisfilter/eval.hpp"
#include "aisfilter/model_io.hpp"
#include "aisfilter/rng.hpp"

namespace ais {

namespace fs = std::filesystem;

namespace {

std::string format_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EmptyFile(path + " (cannot open)");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Config load_config_or_default(const std::string& path,
                              const std::optional<MatchMode>& mode_override) {
    Config config = path.empty() ? Config{} : load_config(path);
    if (mode_override) config.mode = *mode_override;
    config.validate();
    return config;
}

std::vector<LabeledSample> load_corpus(const std::string& path, MatchMode mode) {
    return mode == MatchMode::AttributeInterval ? load_spambase(path) : load_email_dir(path);
}

struct TrainedModel {
    ModelFile model;
    DetectorSet unpruned_spam;
    SplitCorpus split;  // normalized
};

// Shared by train and correct: deterministic split, normalization, detector
// generation, combination.
TrainedModel train_pipeline(const std::vector<LabeledSample>& corpus, const Config& config) {
    TrainedModel t;
    t.split = split_train_test(corpus, config.split_ratio, config.seed);

    Normalization norm;
    if (config.mode == MatchMode::AttributeInterval) {
        norm = Normalization::fit(t.split.train);
        norm.apply_in_place(t.split.train);
        norm.apply_in_place(t.split.test);
    }

    std::vector<LabeledSample> spam_train;
    std::vector<LabeledSample> nonspam_train;
    for (const auto& s : t.split.train) {
        (s.label == Class::Spam ? spam_train : nonspam_train).push_back(s);
    }

    const MatchRule rule = config.rule();
    t.unpruned_spam =
        generate_detector_set(spam_train, nonspam_train, Class::Spam, rule, config.target_count,
                              config.max_attempts, derive_seed(config.seed, 1), norm);
    const DetectorSet nonspam_set =
        generate_detector_set(nonspam_train, spam_train, Class::NonSpam, rule,
                              config.target_count, config.max_attempts,
                              derive_seed(config.seed, 2), norm);

    t.model.config = config;
    t.model.combined = build_combined(t.unpruned_spam, nonspam_set, config.cross());
    return t;
}

// Exhaustive censoring verification over the training split.
std::size_t count_censoring_violations(const DetectorSet& set,
                                       const std::vector<LabeledSample>& opposite) {
    std::size_t violations = 0;
    for (const auto& d : set.detectors) {
        for (const auto& s : opposite) {
            if (detector_matches(d, s.vector, set.rule)) ++violations;
        }
    }
    return violations;
}

void print_set_summary(const DetectorSet& set, std::ostream& out) {
    out << "  " << to_string(set.cls) << ": " << set.size() << " detectors ("
        << set.stats.attempts << " candidates, " << set.stats.rejected_censoring
        << " censored, " << set.stats.rejected_spreading << " too close)\n";
}

// Spambase-format rows for classification: 57 attribute fields, or 58 with a
// trailing label that is ignored here.
std::vector<LabeledSample> load_classify_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmptyFile(path + " (cannot open)");
    std::vector<LabeledSample> rows;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::string_view rest(line);
        while (true) {
            const std::size_t comma = rest.find(',');
            fields.emplace_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 57 && fields.size() != 58) {
            throw MalformedRow(row, "expected 57 attributes (or 58 with a label), got " +
                                        std::to_string(fields.size()) + " fields");
        }
        NumericVector attrs;
        attrs.reserve(57);
        for (std::size_t i = 0; i < 57; ++i) {
            double value = 0.0;
            const char* end = fields[i].data() + fields[i].size();
            auto [ptr, ec] = std::from_chars(fields[i].data(), end, value);
            if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
                throw MalformedRow(row, "non-numeric attribute in field " + std::to_string(i + 1));
            }
            attrs.push_back(value);
        }
        rows.push_back(LabeledSample{FeatureVector{std::move(attrs)}, Class::NonSpam,
                                     "row-" + std::to_string(row)});
    }
    if (rows.empty()) throw EmptyFile(path);
    return rows;
}

std::vector<LabeledSample> load_email_inputs(const std::string& path) {
    std::vector<LabeledSample> inputs;
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
    } else {
        files.emplace_back(path);
    }
    for (const auto& f : files) {
        inputs.push_back(LabeledSample{FeatureVector{preprocess_email(read_file(f.string()))},
                                       Class::NonSpam, f.filename().string()});
    }
    if (inputs.empty()) throw EmptyFile(path + " (no messages found)");
    return inputs;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return kExitUsage;
    if (dynamic_cast<const ModelError*>(&e)) return kExitModel;
    return kExitData;
}

LabeledSample load_one_sample(const std::string& path, bool raw_email, MatchMode mode,
                              Class label) {
    if (mode == MatchMode::TokenOverlap) {
        // Token models always take raw e-mail input.
        return LabeledSample{FeatureVector{preprocess_email(read_file(path))}, label,
                             fs::path(path).filename().string()};
    }
    if (raw_email) throw VariantMismatch();
    auto rows = load_classify_rows(path);
    LabeledSample s = std::move(rows.front());
    s.label = label;
    s.id = fs::path(path).filename().string();
    return s;
}

// Training samples of the class opposite to `label`, in detector space.
std::vector<LabeledSample> opposite_training(const std::vector<LabeledSample>& corpus,
                                             const ModelFile& model, Class label) {
    SplitCorpus split =
        split_train_test(corpus, model.config.split_ratio, model.config.seed);
    if (model.config.mode == MatchMode::AttributeInterval) {
        model.combined.spam_set.normalization.apply_in_place(split.train);
    }
    std::vector<LabeledSample> opposite;
    for (auto& s : split.train) {
        if (s.label != label) opposite.push_back(std::move(s));
    }
    return opposite;
}

}  // namespace

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::istringstream in(spec);
    std::string token;
    auto parse_one = [](const std::string& text) {
        std::uint64_t value = 0;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc() || ptr != end) {
            throw ConfigError("bad seed '" + text + "'");
        }
        return value;
    };
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(parse_one(token));
            continue;
        }
        const std::uint64_t lo = parse_one(token.substr(0, dots));
        const std::uint64_t hi = parse_one(token.substr(dots + 2));
        if (hi < lo) throw ConfigError("seed range '" + token + "' is descending");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    if (seeds.empty()) throw ConfigError("no seeds given");
    return seeds;
}

std::vector<LabeledSample> load_email_dir(const std::string& root) {
    std::vector<LabeledSample> samples;
    for (const auto& [sub, label] :
         {std::pair{"spam", Class::Spam}, std::pair{"nonspam", Class::NonSpam}}) {
        const fs::path dir = fs::path(root) / sub;
        if (!fs::is_directory(dir)) {
            throw EmptyFile(dir.string() + " (token corpus needs spam/ and nonspam/)");
        }
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            TokenList tokens = preprocess_email(read_file(f.string()));
            if (tokens.empty()) continue;  // nothing matchable in this message
            samples.push_back(LabeledSample{FeatureVector{std::move(tokens)}, label,
                                            std::string(sub) + "/" + f.filename().string()});
        }
    }
    if (samples.empty()) throw EmptyFile(root + " (no usable messages)");
    return samples;
}

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const Config config = load_config_or_default(args.config_path, args.mode_override);
        const auto corpus = load_corpus(args.corpus_path, config.mode);
        TrainedModel t = train_pipeline(corpus, config);

        save_model(t.model, args.model_out);

        std::vector<LabeledSample> spam_train;
        std::vector<LabeledSample> nonspam_train;
        for (const auto& s : t.split.train) {
            (s.label == Class::Spam ? spam_train : nonspam_train).push_back(s);
        }
        out << "trained on " << t.split.train.size() << " samples (" << spam_train.size()
            << " spam, " << nonspam_train.size() << " nonspam), held out "
            << t.split.test.size() << "\n";
        print_set_summary(t.unpruned_spam, out);
        print_set_summary(t.model.combined.nonspam_set, out);
        out << "  cross-pruned " << t.model.combined.pruned_ids.size()
            << " spam detectors -> combined spam set " << t.model.combined.spam_set.size()
            << "\n";

        const std::size_t spam_violations =
            count_censoring_violations(t.unpruned_spam, nonspam_train);
        const std::size_t nonspam_violations =
            count_censoring_violations(t.model.combined.nonspam_set, spam_train);
        out << "censoring check on training split: "
            << (spam_violations + nonspam_violations == 0 ? "clean" : "VIOLATED") << " ("
            << spam_violations << " spam, " << nonspam_violations << " nonspam violations)\n";
        out << "model written to " << args.model_out << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "train: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const ModelFile model = load_model(args.model_path);
        const MatchMode mode = model.config.mode;

        std::vector<LabeledSample> inputs;
        if (args.raw_email) {
            if (mode != MatchMode::TokenOverlap) throw VariantMismatch();
            inputs = load_email_inputs(args.input_path);
        } else {
            if (mode != MatchMode::AttributeInterval) throw VariantMismatch();
            inputs = load_classify_rows(args.input_path);
            const Normalization& norm = model.combined.spam_set.normalization;
            norm.apply_in_place(inputs);
        }

        for (const auto& sample : inputs) {
            if (length(sample.vector) == 0) {
                // Nothing matchable: empty messages fall through to non-spam.
                out << sample.id << " nonspam 0 0\n";
                continue;
            }
            const Decision d = classify_improved(model.combined, sample.vector);
            out << sample.id << " " << to_string(d.label) << " " << format_score(d.spam_score)
                << " " << format_score(d.nonspam_score) << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "classify: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const Config config = load_config_or_default(args.config_path, args.mode_override);
        const auto seeds = parse_seeds(args.seeds_spec);
        const auto corpus = load_corpus(args.corpus_path, config.mode);

        const ExperimentReport report = run_experiment(corpus, config, seeds);

        const std::string csv_path = args.report_out + ".csv";
        const std::string json_path = args.report_out + ".json";
        {
            std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
            if (!csv) throw EmptyFile(csv_path + " (cannot write)");
            write_report_csv(report, csv);
        }
        {
            std::ofstream json(json_path, std::ios::binary | std::ios::trunc);
            if (!json) throw EmptyFile(json_path + " (cannot write)");
            write_report_json(report, json);
        }

        print_report_table(report, out);
        out << "\nreports written to " << csv_path << " and " << json_path << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "sweep: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_correct(const CorrectArgs& args, std::ostream& out, std::ostream& err) {
    try {
        ModelFile model = load_model(args.model_path);

        Class label;
        if (args.true_label == "spam") {
            label = Class::Spam;
        } else if (args.true_label == "nonspam") {
            label = Class::NonSpam;
        } else {
            throw ConfigError("true label must be 'spam' or 'nonspam', got '" +
                              args.true_label + "'");
        }

        LabeledSample sample =
            load_one_sample(args.sample_path, args.raw_email, model.config.mode, label);
        if (model.config.mode == MatchMode::AttributeInterval) {
            sample.vector = model.combined.spam_set.normalization.apply(
                std::get<NumericVector>(sample.vector));
        }
        if (length(sample.vector) == 0) {
            throw EmptyInput(args.sample_path + ": sample has no matchable content");
        }

        const auto corpus = load_corpus(args.corpus_path, model.config.mode);
        const auto opposite = opposite_training(corpus, model, label);

        const CorrectionResult result = correct_error(model.combined, sample, opposite);
        if (result.outcome != AddOutcome::Accepted) {
            out << to_string(result.outcome) << "\n";
            return kExitOk;  // rejection is a reported outcome, not an error
        }

        model.combined = result.combined;
        save_model(model, args.model_path);
        out << "accepted: added " << to_string(label) << " detector from " << sample.id;
        if (!result.newly_pruned.empty()) {
            out << "; re-pruned " << result.newly_pruned.size() << " spam detector(s)";
        }
        out << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "correct: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace ais
