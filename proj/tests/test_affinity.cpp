#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aisfilter/affinity.hpp"
#include "aisfilter/detectors.hpp"
#include "aisfilter/errors.hpp"
#include "aisfilter/rng.hpp"
#include "oracles.hpp"

using namespace ais;

namespace {

MatchRule token_rule(double theta = 0.5) {
    return MatchRule{MatchMode::TokenOverlap, theta, 0.1, 0.05};
}

MatchRule numeric_rule(double theta = 0.5, double tau = 0.1) {
    return MatchRule{MatchMode::AttributeInterval, theta, tau, 0.05};
}

FeatureVector tokens(std::initializer_list<const char*> list) {
    TokenList t;
    for (const char* s : list) t.emplace_back(s);
    return FeatureVector{std::move(t)};
}

TokenList random_tokens(Rng& rng, std::size_t max_len) {
    static const std::vector<std::string> alphabet{"aa", "bb", "cc", "dd", "ee"};
    TokenList t;
    const std::size_t len = 1 + rng.bounded(max_len);
    for (std::size_t i = 0; i < len; ++i) t.push_back(alphabet[rng.bounded(alphabet.size())]);
    return t;
}

NumericVector random_numeric(Rng& rng, std::size_t dim) {
    NumericVector v(dim);
    for (auto& x : v) x = rng.real();
    return v;
}

}  // namespace

TEST_CASE("token affinity basics") {
    const auto rule = token_rule();
    CHECK(affinity(tokens({"win", "cash", "now"}), tokens({"win", "cash", "now"}), rule) ==
          doctest::Approx(1.0));
    CHECK(affinity(tokens({"a", "b", "c"}), tokens({"d", "e"}), rule) == 0.0);
    // matches {b, d}, shorter length 3
    CHECK(affinity(tokens({"a", "b", "c", "d"}), tokens({"b", "d", "e"}), rule) ==
          doctest::Approx(2.0 / 3.0));
    // duplicate tokens count up to the smaller multiplicity
    CHECK(affinity(tokens({"x", "x", "y"}), tokens({"x", "x", "x"}), rule) ==
          doctest::Approx(2.0 / 3.0));
}

TEST_CASE("numeric affinity counts per-attribute intervals") {
    const auto rule = numeric_rule(0.5, 0.05);
    const FeatureVector x{NumericVector{0.1, 0.5, 0.9}};
    const FeatureVector y{NumericVector{0.12, 0.7, 0.91}};
    CHECK(affinity(x, y, rule) == doctest::Approx(2.0 / 3.0));
    // boundary: |dx| == tau counts as a match
    const FeatureVector a{NumericVector{0.2, 0.4}};
    const FeatureVector b{NumericVector{0.25, 0.6}};
    CHECK(affinity(a, b, numeric_rule(0.5, 0.05)) == doctest::Approx(0.5));
}

TEST_CASE("affinity rejects degenerate input") {
    const auto rule = token_rule();
    CHECK_THROWS_AS(affinity(tokens({"a"}), FeatureVector{NumericVector{0.1}}, rule),
                    VariantMismatch);
    CHECK_THROWS_AS(affinity(tokens({}), tokens({"a"}), rule), EmptyVector);
    CHECK_THROWS_AS(affinity(tokens({"a"}), tokens({"b"}), numeric_rule()), VariantMismatch);
    CHECK_THROWS_AS(affinity(FeatureVector{NumericVector{0.1, 0.2}},
                             FeatureVector{NumericVector{0.1}}, numeric_rule()),
                    LengthMismatch);
}

TEST_CASE("affinity range, symmetry, identity over random vectors") {
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const FeatureVector x{random_tokens(rng, 6)};
        const FeatureVector y{random_tokens(rng, 6)};
        const auto rule = token_rule();
        const double a = affinity(x, y, rule);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
        CHECK(a == affinity(y, x, rule));
        CHECK(affinity(x, x, rule) == 1.0);
    }
    for (int i = 0; i < 300; ++i) {
        const std::size_t dim = 1 + rng.bounded(8);
        const FeatureVector x{random_numeric(rng, dim)};
        const FeatureVector y{random_numeric(rng, dim)};
        const auto rule = numeric_rule(0.5, rng.real() * 0.3);
        const double a = affinity(x, y, rule);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
        CHECK(a == affinity(y, x, rule));
        CHECK(affinity(x, x, rule) == 1.0);
    }
}

TEST_CASE("token affinity is monotone in spare-multiplicity appends") {
    // With |x| <= |y| fixed as the shorter, appending to y a token that occurs
    // in x with spare multiplicity cannot decrease affinity.
    Rng rng(11);
    int exercised = 0;
    while (exercised < 200) {
        TokenList x = random_tokens(rng, 4);
        TokenList y = random_tokens(rng, 4);
        if (x.size() > y.size()) std::swap(x, y);
        // find a token with count_x > count_y
        std::string spare;
        for (const auto& t : x) {
            const auto cx = std::count(x.begin(), x.end(), t);
            const auto cy = std::count(y.begin(), y.end(), t);
            if (cx > cy) {
                spare = t;
                break;
            }
        }
        if (spare.empty()) continue;
        const auto rule = token_rule();
        const double before = affinity(FeatureVector{x}, FeatureVector{y}, rule);
        TokenList y2 = y;
        y2.push_back(spare);
        const double after = affinity(FeatureVector{x}, FeatureVector{y2}, rule);
        CHECK(after >= before);
        ++exercised;
    }
}

TEST_CASE("token affinity equals the exhaustive matcher on small lists") {
    const auto lists = oracles::all_token_lists({"a", "b", "c"}, 4);
    const auto rule = token_rule();
    for (const auto& x : lists) {
        for (const auto& y : lists) {
            const double got = affinity(FeatureVector{x}, FeatureVector{y}, rule);
            const double want = oracles::token_affinity_bruteforce(x, y);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("detector_matches uses a strict threshold") {
    const auto rule = token_rule(0.4);
    Detector d;
    d.center = tokens({"a", "b", "c", "d", "e"});
    d.cls = Class::Spam;
    d.id = "spam-0";

    CHECK(detector_matches(d, d.center, rule));  // affinity 1 > any theta < 1
    // affinity exactly 0.4: 2 matches of 5
    const auto v = tokens({"a", "b", "x", "y", "z"});
    CHECK(affinity(d.center, v, rule) == doctest::Approx(0.4));
    CHECK_FALSE(detector_matches(d, v, rule));                    // 0.4 > 0.4 is false
    CHECK(detector_matches(d, v, token_rule(0.35)));              // 0.4 > 0.35
    d.radius_override = 0.39;
    CHECK(detector_matches(d, v, rule));                          // override wins
}

TEST_CASE("center_distance") {
    const auto trule = token_rule();
    CHECK(center_distance(tokens({"a", "b"}), tokens({"a", "b"}), trule) == 0.0);
    CHECK(center_distance(tokens({"a", "b"}), tokens({"c", "d"}), trule) == 1.0);

    const auto nrule = numeric_rule();
    const FeatureVector zeros{NumericVector(57, 0.0)};
    const FeatureVector ones{NumericVector(57, 1.0)};
    CHECK(center_distance(zeros, zeros, nrule) == 0.0);
    CHECK(center_distance(zeros, ones, nrule) == doctest::Approx(1.0));
    const FeatureVector a{NumericVector{0.0, 0.0}};
    const FeatureVector b{NumericVector{0.3, 0.4}};
    CHECK(center_distance(a, b, nrule) == doctest::Approx(0.5 / std::sqrt(2.0)));
}
