#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aisfilter/config.hpp"
#include "aisfilter/feature.hpp"

namespace ais {

// Exit codes shared by every subcommand, stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitModel = 3;

struct TrainArgs {
    std::string corpus_path;
    std::string config_path;              // empty = defaults
    std::string model_out;
    std::optional<MatchMode> mode_override;
};

struct ClassifyArgs {
    std::string model_path;
    std::string input_path;
    bool raw_email = false;  // input is raw e-mail file(s), not Spambase rows
};

struct SweepArgs {
    std::string corpus_path;
    std::string config_path;  // empty = defaults
    std::string seeds_spec;   // "1,2,3" and/or "1..10"
    std::string report_out;   // base path; writes <base>.csv and <base>.json
    std::optional<MatchMode> mode_override;
};

struct CorrectArgs {
    std::string model_path;
    std::string sample_path;
    std::string true_label;   // "spam" | "nonspam"
    std::string corpus_path;  // training corpus; re-split to recover censoring data
    bool raw_email = false;
};

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_correct(const CorrectArgs& args, std::ostream& out, std::ostream& err);

// "1,2,3", "1..10", or a mix ("1..3,7"). Throws ConfigError on nonsense.
std::vector<std::uint64_t> parse_seeds(const std::string& spec);

// Token-mode corpus: directory with spam/ and nonspam/ subdirectories, one
// message per file. Sample ids are "<class>/<filename>".
std::vector<LabeledSample> load_email_dir(const std::string& root);

}  // namespace ais
