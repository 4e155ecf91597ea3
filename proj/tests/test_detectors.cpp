#include <doctest.h>

#include <set>

#include "aisfilter/detectors.hpp"
#include "aisfilter/errors.hpp"
#include "aisfilter/rng.hpp"

using namespace ais;

namespace {

MatchRule token_rule(double theta = 0.5, double min_sep = 0.05) {
    return MatchRule{MatchMode::TokenOverlap, theta, 0.1, min_sep};
}

LabeledSample sample(std::initializer_list<const char*> toks, Class cls, std::string id) {
    TokenList t;
    for (const char* s : toks) t.emplace_back(s);
    return LabeledSample{FeatureVector{std::move(t)}, cls, std::move(id)};
}

// Two clearly separated token populations.
std::vector<LabeledSample> spam_train() {
    return {sample({"win", "cash", "now"}, Class::Spam, "s1"),
            sample({"win", "cash", "fast"}, Class::Spam, "s2")};
}
std::vector<LabeledSample> nonspam_train() {
    return {sample({"meeting", "notes", "agenda"}, Class::NonSpam, "n1"),
            sample({"report", "meeting", "today"}, Class::NonSpam, "n2")};
}

}  // namespace

TEST_CASE("generation censors candidates that match the opposite class") {
    const auto own = std::vector<LabeledSample>{sample({"a", "b", "c"}, Class::Spam, "s1")};
    const auto opposite =
        std::vector<LabeledSample>{sample({"a", "b", "c"}, Class::NonSpam, "n1")};
    // the only candidate equals an opposite-class sample: affinity 1 > theta
    CHECK_THROWS_AS(generate_detector_set(own, opposite, Class::Spam, token_rule(), 1, 50, 1),
                    NoDetectorsGenerated);
}

TEST_CASE("generation applies the spreading gate to duplicate candidates") {
    const auto own = std::vector<LabeledSample>{sample({"a", "b", "c"}, Class::Spam, "s1"),
                                                sample({"a", "b", "c"}, Class::Spam, "s2")};
    const DetectorSet set =
        generate_detector_set(own, {}, Class::Spam, token_rule(), 2, 100, 1);
    CHECK(set.size() == 1);  // second copy sits at distance 0
    CHECK(set.stats.rejected_spreading > 0);
    CHECK(set.stats.rejected_censoring == 0);
    CHECK(set.stats.accepted + set.stats.rejected_censoring + set.stats.rejected_spreading ==
          set.stats.attempts);
}

TEST_CASE("generation on the four-sample corpus separates the classes") {
    const auto spam = spam_train();
    const auto nonspam = nonspam_train();
    const auto rule = token_rule();
    const DetectorSet set =
        generate_detector_set(spam, nonspam, Class::Spam, rule, 10, 100, 42);
    REQUIRE(set.size() == 2);

    // exhaustive: every spam training vector matches, no non-spam one does
    for (const auto& s : spam) {
        bool matched = false;
        for (const auto& d : set.detectors) matched |= detector_matches(d, s.vector, rule);
        CHECK(matched);
    }
    for (const auto& n : nonspam) {
        for (const auto& d : set.detectors) {
            CHECK_FALSE(detector_matches(d, n.vector, rule));
        }
    }

    // invariants: censoring and spreading hold post-build
    for (const auto& d : set.detectors) {
        for (const auto& n : nonspam) {
            CHECK(affinity(d.center, n.vector, rule) <= rule.theta);
        }
        CHECK(d.matched_count == 0);
        CHECK(d.detected_count == 0);
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            CHECK(center_distance(set.detectors[i].center, set.detectors[j].center, rule) >=
                  rule.min_separation);
        }
    }
}

TEST_CASE("generation is deterministic in its seed") {
    const auto spam = spam_train();
    const auto nonspam = nonspam_train();
    const DetectorSet a =
        generate_detector_set(spam, nonspam, Class::Spam, token_rule(), 2, 50, 9);
    const DetectorSet b =
        generate_detector_set(spam, nonspam, Class::Spam, token_rule(), 2, 50, 9);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.detectors[i].id == b.detectors[i].id);
        CHECK(std::get<TokenList>(a.detectors[i].center) ==
              std::get<TokenList>(b.detectors[i].center));
    }
    CHECK(a.stats.attempts == b.stats.attempts);
}

TEST_CASE("generation requires own-class samples") {
    CHECK_THROWS_AS(
        generate_detector_set({}, nonspam_train(), Class::Spam, token_rule(), 1, 10, 1),
        InsufficientSamples);
}

TEST_CASE("update_counters bumps detected always and matched on hits") {
    const auto rule = token_rule();
    DetectorSet set = generate_detector_set(spam_train(), nonspam_train(), Class::Spam, rule,
                                            10, 100, 42);
    REQUIRE(set.size() == 2);

    // a vector equal to one center: that detector matches (affinity 1), the
    // other sees affinity 2/3 > 0.5 and matches too; craft a vector matching
    // exactly one instead
    const FeatureVector only_first{TokenList{"win", "cash", "now", "now", "now", "now"}};
    // affinity to {win,cash,now}: 3/3 = 1; to {win,cash,fast}: 2/3 > 0.5 still.
    // Use a disjoint vector for the no-match case.
    const auto report = update_counters(set, only_first, "v1");
    CHECK(report.size() == 2);
    for (const auto& d : set.detectors) CHECK(d.detected_count == 1);

    const FeatureVector nothing{TokenList{"zz", "qq"}};
    const auto report2 = update_counters(set, nothing, "v2");
    CHECK(report2.empty());
    for (const auto& d : set.detectors) {
        CHECK(d.detected_count == 2);
        CHECK(d.matched_count <= d.detected_count);
    }
}

TEST_CASE("after N updates every detector has detected_count == N") {
    Rng rng(5);
    const auto rule = token_rule();
    DetectorSet set = generate_detector_set(spam_train(), nonspam_train(), Class::Spam, rule,
                                            10, 100, 42);
    const std::vector<std::string> alphabet{"win", "cash", "now", "meeting", "zz", "qq"};
    const std::size_t n = 50;
    for (std::size_t i = 0; i < n; ++i) {
        TokenList t;
        const std::size_t len = 1 + rng.bounded(5);
        for (std::size_t k = 0; k < len; ++k) {
            t.push_back(alphabet[rng.bounded(alphabet.size())]);
        }
        update_counters(set, FeatureVector{t}, "v" + std::to_string(i));
    }
    for (const auto& d : set.detectors) {
        CHECK(d.detected_count == n);
        CHECK(d.matched_count <= d.detected_count);
    }
}

TEST_CASE("build_combined prunes by cross affinity") {
    const auto rule = token_rule();
    auto make_set = [&](Class cls, std::vector<TokenList> centers) {
        DetectorSet set;
        set.rule = rule;
        set.cls = cls;
        std::size_t i = 0;
        for (auto& c : centers) {
            set.detectors.push_back(Detector{FeatureVector{std::move(c)}, std::nullopt, cls, 0,
                                             0, std::string(to_string(cls)) + "-" +
                                                    std::to_string(i++)});
        }
        return set;
    };

    SUBCASE("disjoint populations keep everything") {
        const auto spam = make_set(Class::Spam, {{"win", "cash"}, {"free", "prize"}});
        const auto nonspam = make_set(Class::NonSpam, {{"meeting", "notes"}});
        const CombinedDetector cd = build_combined(spam, nonspam, 0.5);
        CHECK(cd.pruned_ids.empty());
        CHECK(cd.spam_set.size() == 2);
    }

    SUBCASE("identical centers are pruned at any cross_theta below one") {
        const auto spam = make_set(Class::Spam, {{"win", "cash"}, {"same", "tokens"}});
        const auto nonspam = make_set(Class::NonSpam, {{"same", "tokens"}});
        const CombinedDetector cd = build_combined(spam, nonspam, 0.99);
        REQUIRE(cd.pruned_ids.size() == 1);
        CHECK(cd.pruned_ids[0] == "spam-1");
        CHECK(cd.spam_set.size() == 1);
    }

    SUBCASE("hand-built cross affinity 0.8 against cross_theta 0.6") {
        // spam-1 shares 4 of 5 tokens with a non-spam detector
        const auto spam = make_set(Class::Spam, {{"win", "cash", "now", "deal", "top"},
                                                 {"free", "cash", "win", "now", "notes"},
                                                 {"prize", "claim", "link", "act", "fast"}});
        const auto nonspam =
            make_set(Class::NonSpam, {{"free", "cash", "win", "now", "agenda"},
                                      {"meeting", "notes", "report", "today", "room"}});
        CHECK(affinity(spam.detectors[1].center, nonspam.detectors[0].center, rule) ==
              doctest::Approx(0.8));
        const CombinedDetector cd = build_combined(spam, nonspam, 0.6);
        REQUIRE(cd.pruned_ids == std::vector<std::string>{"spam-1"});
        CHECK(cd.spam_set.size() == 2);

        // surviving spam detectors sit at or below the cross threshold
        for (const auto& d : cd.spam_set.detectors) {
            for (const auto& n : cd.nonspam_set.detectors) {
                CHECK(affinity(d.center, n.center, rule) <= 0.6);
            }
        }
    }

    SUBCASE("pruning everything is an error") {
        const auto spam = make_set(Class::Spam, {{"same", "tokens"}});
        const auto nonspam = make_set(Class::NonSpam, {{"same", "tokens"}});
        CHECK_THROWS_AS(build_combined(spam, nonspam, 0.5), EmptySpamSet);
    }
}

TEST_CASE("add_detector_from_sample applies the generation gates") {
    const auto rule = token_rule();
    const auto nonspam = nonspam_train();
    DetectorSet set = generate_detector_set(spam_train(), nonspam, Class::Spam, rule, 10, 100,
                                            42);
    const std::size_t before = set.size();

    SUBCASE("disjoint sample is accepted") {
        const auto s = sample({"cheap", "pills", "order"}, Class::Spam, "x1");
        CHECK(add_detector_from_sample(set, s, nonspam) == AddOutcome::Accepted);
        CHECK(set.size() == before + 1);
        // new id does not collide with existing ones
        std::set<std::string> ids;
        for (const auto& d : set.detectors) ids.insert(d.id);
        CHECK(ids.size() == set.size());
    }

    SUBCASE("sample matching the opposite class is censored") {
        const auto s = sample({"meeting", "notes", "agenda"}, Class::Spam, "x2");
        CHECK(add_detector_from_sample(set, s, nonspam) == AddOutcome::RejectedCensoring);
        CHECK(set.size() == before);
    }

    SUBCASE("re-inserting the same sample trips the spreading gate") {
        const auto s = sample({"cheap", "pills", "order"}, Class::Spam, "x3");
        REQUIRE(add_detector_from_sample(set, s, nonspam) == AddOutcome::Accepted);
        CHECK(add_detector_from_sample(set, s, nonspam) == AddOutcome::RejectedSpreading);
        CHECK(set.size() == before + 1);
    }
}
