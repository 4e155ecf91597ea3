#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "aisfilter/classifier.hpp"
#include "aisfilter/errors.hpp"
#include "aisfilter/model_io.hpp"
#include "aisfilter/rng.hpp"

using namespace ais;

namespace {

namespace fs = std::filesystem;

fs::path temp_path(const char* tag) {
    static int counter = 0;
    return fs::temp_directory_path() / ("aisfilter_model_test_" + std::to_string(::getpid()) +
                                        "_" + tag + std::to_string(counter++) + ".json");
}

ModelFile numeric_model() {
    Config config;
    config.seed = 3;
    ModelFile m;
    m.config = config;

    const MatchRule rule = config.rule();
    Normalization norm;
    norm.mins = {0.0, 0.0, 1.0};
    norm.maxs = {10.0, 5.5, 1.0};

    DetectorSet spam_set;
    spam_set.rule = rule;
    spam_set.cls = Class::Spam;
    spam_set.normalization = norm;
    spam_set.detectors.push_back(Detector{FeatureVector{NumericVector{0.9, 0.8, 0.0}},
                                          std::nullopt, Class::Spam, 3, 7, "spam-0"});
    spam_set.detectors.push_back(Detector{FeatureVector{NumericVector{0.1, 0.9, 0.0}}, 0.75,
                                          Class::Spam, 0, 7, "spam-1"});
    spam_set.stats = GenerationStats{25, 2, 20, 3};

    DetectorSet nonspam_set;
    nonspam_set.rule = rule;
    nonspam_set.cls = Class::NonSpam;
    nonspam_set.normalization = norm;
    nonspam_set.detectors.push_back(Detector{FeatureVector{NumericVector{0.05, 0.1, 0.0}},
                                             std::nullopt, Class::NonSpam, 1, 7, "nonspam-0"});

    m.combined = CombinedDetector{spam_set, nonspam_set, {"spam-9"}, 0.5};
    return m;
}

}  // namespace

TEST_CASE("model round-trip preserves decisions bit for bit") {
    const ModelFile model = numeric_model();
    const auto path = temp_path("roundtrip");
    save_model(model, path.string());
    const ModelFile loaded = load_model(path.string());

    CHECK(loaded.config.seed == model.config.seed);
    CHECK(loaded.combined.pruned_ids == model.combined.pruned_ids);
    CHECK(loaded.combined.spam_set.size() == 2);
    CHECK(loaded.combined.spam_set.detectors[1].radius_override == 0.75);
    CHECK(loaded.combined.spam_set.detectors[0].matched_count == 3);
    CHECK(loaded.combined.spam_set.stats.rejected_censoring == 20);
    CHECK(loaded.combined.spam_set.normalization.maxs == model.combined.spam_set.normalization.maxs);

    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        NumericVector v(3);
        for (auto& x : v) x = rng.real();
        const Decision before = classify_improved(model.combined, FeatureVector{v});
        const Decision after = classify_improved(loaded.combined, FeatureVector{v});
        CHECK(before.label == after.label);
        CHECK(before.spam_score == after.spam_score);
        CHECK(before.nonspam_score == after.nonspam_score);
    }
    fs::remove(path);
}

TEST_CASE("serialization is stable byte for byte") {
    const ModelFile model = numeric_model();
    const std::string once = to_json(model);
    const std::string twice = to_json(model_from_json(once));
    CHECK(once == twice);
}

TEST_CASE("token-mode models persist token centers") {
    Config config;
    config.mode = MatchMode::TokenOverlap;
    ModelFile m;
    m.config = config;
    DetectorSet spam_set;
    spam_set.rule = config.rule();
    spam_set.cls = Class::Spam;
    spam_set.detectors.push_back(Detector{FeatureVector{TokenList{"win", "cash"}}, std::nullopt,
                                          Class::Spam, 0, 0, "spam-0"});
    DetectorSet nonspam_set;
    nonspam_set.rule = config.rule();
    nonspam_set.cls = Class::NonSpam;
    nonspam_set.detectors.push_back(Detector{FeatureVector{TokenList{"meeting", "notes"}},
                                             std::nullopt, Class::NonSpam, 0, 0, "nonspam-0"});
    m.combined = CombinedDetector{spam_set, nonspam_set, {}, 0.5};

    const ModelFile loaded = model_from_json(to_json(m));
    CHECK(std::get<TokenList>(loaded.combined.spam_set.detectors[0].center) ==
          TokenList{"win", "cash"});
    CHECK(loaded.combined.spam_set.normalization.empty());
    CHECK(loaded.config.mode == MatchMode::TokenOverlap);
}

TEST_CASE("model loading rejects damaged input") {
    CHECK_THROWS_AS(model_from_json("not json at all"), ModelError);
    CHECK_THROWS_AS(model_from_json("{}"), ModelError);

    const std::string good = to_json(numeric_model());
    CHECK_THROWS_AS(model_from_json(good.substr(0, good.size() / 2)), ModelError);

    std::string wrong_version = good;
    const auto pos = wrong_version.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    wrong_version.replace(pos, 19, "\"format_version\": 9");
    CHECK_THROWS_AS(model_from_json(wrong_version), ModelError);

    CHECK_THROWS_AS(load_model("/nonexistent/path/model.json"), ModelError);
}

TEST_CASE("save_model replaces the target atomically") {
    const auto path = temp_path("atomic");
    {
        std::ofstream prior(path);
        prior << "old contents";
    }
    const ModelFile model = numeric_model();
    save_model(model, path.string());
    const ModelFile loaded = load_model(path.string());
    CHECK(loaded.combined.spam_set.size() == 2);
    CHECK_FALSE(fs::exists(path.string() + ".tmp"));
    fs::remove(path);
}
