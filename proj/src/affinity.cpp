#include "aisfilter/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "aisfilter/errors.hpp"

namespace ais {

namespace {

void check_pair(const FeatureVector& x, const FeatureVector& y, const MatchRule& rule) {
    const bool want_numeric = rule.mode == MatchMode::AttributeInterval;
    if (is_numeric(x) != is_numeric(y)) throw VariantMismatch();
    if (is_numeric(x) != want_numeric) throw VariantMismatch();
    if (length(x) == 0 || length(y) == 0) throw EmptyVector();
    if (want_numeric && length(x) != length(y)) throw LengthMismatch(length(x), length(y));
}

std::size_t token_matches(const TokenList& x, const TokenList& y) {
    // Multiset intersection: sum over distinct tokens of min(count_x, count_y).
    const TokenList& small = x.size() <= y.size() ? x : y;
    const TokenList& large = x.size() <= y.size() ? y : x;
    std::unordered_map<std::string, std::size_t> counts;
    counts.reserve(small.size());
    for (const auto& t : small) ++counts[t];
    std::size_t matches = 0;
    for (const auto& t : large) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++matches;
        }
    }
    return matches;
}

std::size_t interval_matches(const NumericVector& x, const NumericVector& y, double tau) {
    std::size_t matches = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::fabs(x[i] - y[i]) <= tau) ++matches;
    }
    return matches;
}

}  // namespace

double affinity(const FeatureVector& x, const FeatureVector& y, const MatchRule& rule) {
    check_pair(x, y, rule);
    const std::size_t shorter = std::min(length(x), length(y));
    std::size_t matches = 0;
    if (rule.mode == MatchMode::TokenOverlap) {
        matches = token_matches(std::get<TokenList>(x), std::get<TokenList>(y));
    } else {
        matches = interval_matches(std::get<NumericVector>(x), std::get<NumericVector>(y),
                                   rule.tau);
    }
    return static_cast<double>(matches) / static_cast<double>(shorter);
}

double center_distance(const FeatureVector& a, const FeatureVector& b, const MatchRule& rule) {
    check_pair(a, b, rule);
    if (rule.mode == MatchMode::TokenOverlap) {
        return 1.0 - affinity(a, b, rule);
    }
    const auto& x = std::get<NumericVector>(a);
    const auto& y = std::get<NumericVector>(b);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(x.size()));
}

}  // namespace ais
