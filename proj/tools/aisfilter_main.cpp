#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aisfilter/commands.hpp"

namespace {

std::optional<ais::MatchMode> parse_mode(const std::string& mode) {
    if (mode.empty()) return std::nullopt;
    if (mode == "token") return ais::MatchMode::TokenOverlap;
    if (mode == "numeric") return ais::MatchMode::AttributeInterval;
    throw CLI::ValidationError("--mode", "must be 'token' or 'numeric'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Negative-selection e-mail classifier: dual detector populations\n"
                 "combined into one spam filter, with a Spambase evaluation harness."};
    app.require_subcommand(1);

    // train
    std::string train_corpus, train_config, train_out = "model.json", train_mode;
    auto* train = app.add_subcommand("train", "Generate detector sets and write a model");
    train->add_option("corpus", train_corpus, "Spambase CSV, or e-mail directory in token mode")
        ->required();
    train->add_option("--config", train_config, "key=value config file");
    train->add_option("--out", train_out, "model output path (default model.json)");
    train->add_option("--mode", train_mode, "token|numeric (overrides config)");

    // classify
    std::string cls_model, cls_input;
    bool cls_raw = false;
    auto* classify = app.add_subcommand("classify", "Label inputs with a trained model");
    classify->add_option("model", cls_model, "model file from train")->required();
    classify->add_option("input", cls_input, "row file, or e-mail file/directory with --raw-email")
        ->required();
    classify->add_flag("--raw-email", cls_raw, "input is raw e-mail (token-mode models)");

    // sweep
    std::string sweep_corpus, sweep_config, sweep_seeds = "1..10", sweep_out = "report",
                sweep_mode;
    auto* sweep = app.add_subcommand("sweep", "Seed sweep comparing improved vs baseline");
    sweep->add_option("corpus", sweep_corpus, "corpus path")->required();
    sweep->add_option("--config", sweep_config, "key=value config file");
    sweep->add_option("--seeds", sweep_seeds, "comma list and/or a..b range (default 1..10)");
    sweep->add_option("--out", sweep_out, "report base path; writes <base>.csv and <base>.json");
    sweep->add_option("--mode", sweep_mode, "token|numeric (overrides config)");

    // correct
    std::string cor_model, cor_sample, cor_label, cor_corpus;
    bool cor_raw = false;
    auto* correct = app.add_subcommand("correct", "Retrain on one misclassified sample");
    correct->add_option("model", cor_model, "model file to update in place")->required();
    correct->add_option("sample", cor_sample, "one-row file, or e-mail file in token mode")
        ->required();
    correct->add_option("label", cor_label, "true label: spam|nonspam")->required();
    correct->add_option("--corpus", cor_corpus, "training corpus (for the censoring gate)")
        ->required();
    correct->add_flag("--raw-email", cor_raw, "sample is raw e-mail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ais::kExitOk : ais::kExitUsage;
    }

    try {
        if (*train) {
            return ais::cmd_train({train_corpus, train_config, train_out,
                                   parse_mode(train_mode)},
                                  std::cout, std::cerr);
        }
        if (*classify) {
            return ais::cmd_classify({cls_model, cls_input, cls_raw}, std::cout, std::cerr);
        }
        if (*sweep) {
            return ais::cmd_sweep({sweep_corpus, sweep_config, sweep_seeds, sweep_out,
                                   parse_mode(sweep_mode)},
                                  std::cout, std::cerr);
        }
        return ais::cmd_correct({cor_model, cor_sample, cor_label, cor_corpus, cor_raw},
                                std::cout, std::cerr);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return ais::kExitUsage;
    }
}
