#include "aisfilter/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "aisfilter/errors.hpp"
#include "aisfilter/rng.hpp"

namespace ais {

namespace {

constexpr std::size_t kSpambaseAttrs = 57;

double parse_attr(std::string_view field, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw MalformedRow(row, "non-numeric attribute in field " + std::to_string(col + 1) +
                                    ": '" + std::string(field) + "'");
    }
    if (!std::isfinite(value) || value < 0.0) {
        throw MalformedRow(row, "attribute in field " + std::to_string(col + 1) +
                                    " must be finite and non-negative");
    }
    return value;
}

}  // namespace

std::vector<LabeledSample> load_spambase(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmptyFile(path + " (cannot open)");

    std::vector<LabeledSample> samples;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        NumericVector attrs;
        attrs.reserve(kSpambaseAttrs);
        std::string_view rest(line);
        std::string_view label_field;
        std::size_t field_count = 0;
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view field = rest.substr(0, comma);
            ++field_count;
            if (field_count > kSpambaseAttrs + 1) {
                throw MalformedRow(row, "expected 58 fields, got more");
            }
            if (field_count <= kSpambaseAttrs) {
                attrs.push_back(parse_attr(field, row, field_count - 1));
            } else {
                label_field = field;
            }
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (field_count != kSpambaseAttrs + 1) {
            throw MalformedRow(row, "expected 58 fields, got " + std::to_string(field_count));
        }

        Class label;
        if (label_field == "1") {
            label = Class::Spam;
        } else if (label_field == "0") {
            label = Class::NonSpam;
        } else {
            throw MalformedRow(row, "label must be 0 or 1, got '" + std::string(label_field) + "'");
        }
        samples.push_back(LabeledSample{FeatureVector{std::move(attrs)}, label,
                                        "row-" + std::to_string(row)});
    }
    if (samples.empty()) throw EmptyFile(path);
    return samples;
}

TokenList preprocess_email(const std::string& raw) {
    // Header = everything before the first blank line, body = the rest.
    // A message with no blank line is all body.
    std::size_t body_start = 0;
    bool has_header = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] == '\n' && (raw[i + 1] == '\n' ||
                               (raw[i + 1] == '\r' && i + 2 < raw.size() && raw[i + 2] == '\n'))) {
            has_header = true;
            body_start = i + (raw[i + 1] == '\n' ? 2 : 3);
            break;
        }
    }

    std::string text;
    text.reserve(raw.size());
    if (has_header) text.append(raw, 0, body_start);

    // Strip <...> markup spans from the body; an unclosed '<' is left in place
    // and falls out as an ordinary token boundary.
    const std::size_t begin = has_header ? body_start : 0;
    std::size_t i = begin;
    while (i < raw.size()) {
        if (raw[i] == '<') {
            const std::size_t close = raw.find('>', i + 1);
            if (close != std::string::npos) {
                text.push_back(' ');
                i = close + 1;
                continue;
            }
        }
        text.push_back(raw[i]);
        ++i;
    }

    TokenList tokens;
    std::string current;
    for (const char ch : text) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            current.push_back(static_cast<char>(c));
        } else if (c >= 'A' && c <= 'Z') {
            current.push_back(static_cast<char>(c - 'A' + 'a'));
        } else {
            if (current.size() >= 2) tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (current.size() >= 2) tokens.push_back(std::move(current));
    return tokens;
}

SplitCorpus split_train_test(const std::vector<LabeledSample>& samples, double ratio,
                             std::uint64_t seed) {
    if (samples.empty()) throw DegenerateSplit("cannot split an empty corpus");
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw DegenerateSplit("split ratio must lie strictly between 0 and 1");
    }

    std::vector<std::size_t> spam_idx;
    std::vector<std::size_t> nonspam_idx;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        (samples[i].label == Class::Spam ? spam_idx : nonspam_idx).push_back(i);
    }

    SplitCorpus out;
    out.seed = seed;
    out.ratio = ratio;
    std::vector<bool> in_train(samples.size(), false);

    Rng rng(derive_seed(seed, 0x53504c4954ULL));
    auto mark_class = [&](std::vector<std::size_t>& idx, const char* name) {
        if (idx.empty()) {
            throw DegenerateSplit(std::string("class ") + name + " has no samples");
        }
        rng.shuffle(idx);
        // Round-half-up keeps each class within one sample of the ratio.
        const std::size_t take =
            static_cast<std::size_t>(std::floor(ratio * static_cast<double>(idx.size()) + 0.5));
        if (take == 0) {
            throw DegenerateSplit(std::string("class ") + name +
                                  " would receive zero training samples");
        }
        for (std::size_t k = 0; k < take; ++k) in_train[idx[k]] = true;
    };
    mark_class(spam_idx, "spam");
    mark_class(nonspam_idx, "nonspam");

    for (std::size_t i = 0; i < samples.size(); ++i) {
        (in_train[i] ? out.train : out.test).push_back(samples[i]);
    }
    return out;
}

Normalization Normalization::fit(const std::vector<LabeledSample>& train) {
    Normalization n;
    for (const auto& s : train) {
        if (!is_numeric(s.vector)) continue;
        const auto& v = std::get<NumericVector>(s.vector);
        if (n.mins.empty()) {
            n.mins.assign(v.size(), std::numeric_limits<double>::infinity());
            n.maxs.assign(v.size(), -std::numeric_limits<double>::infinity());
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            n.mins[i] = std::min(n.mins[i], v[i]);
            n.maxs[i] = std::max(n.maxs[i], v[i]);
        }
    }
    return n;
}

NumericVector Normalization::apply(const NumericVector& raw) const {
    if (mins.size() != raw.size()) throw LengthMismatch(mins.size(), raw.size());
    NumericVector out(raw.size(), 0.0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double range = maxs[i] - mins[i];
        if (range <= 0.0) continue;  // constant attribute carries no information
        out[i] = std::clamp((raw[i] - mins[i]) / range, 0.0, 1.0);
    }
    return out;
}

void Normalization::apply_in_place(std::vector<LabeledSample>& samples) const {
    for (auto& s : samples) {
        if (is_numeric(s.vector)) {
            s.vector = apply(std::get<NumericVector>(s.vector));
        }
    }
}

}  // namespace ais
