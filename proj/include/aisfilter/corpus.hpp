#pragma once

#include <string>
#include <vector>

#include "aisfilter/feature.hpp"

namespace ais {

struct SplitCorpus {
    std::vector<LabeledSample> train;
    std::vector<LabeledSample> test;
    std::uint64_t seed = 0;
    double ratio = 0.6;
};

// Per-attribute min/max fitted on the training split. Applying it maps raw
// attribute values into [0, 1]; values outside the fitted range are clamped so
// unseen test data cannot leave the unit cube. Attributes with zero training
// range map to 0.
struct Normalization {
    std::vector<double> mins;
    std::vector<double> maxs;

    static Normalization fit(const std::vector<LabeledSample>& train);
    NumericVector apply(const NumericVector& raw) const;
    void apply_in_place(std::vector<LabeledSample>& samples) const;
    bool empty() const { return mins.empty(); }
};

// Reads a Spambase-format CSV: 58 comma-separated fields per row, 57 finite
// non-negative numeric attributes plus a final 0/1 label. Sample ids are
// "row-<n>" with n the 1-based line number. Throws EmptyFile / MalformedRow.
std::vector<LabeledSample> load_spambase(const std::string& path);

// Tokenizes one raw e-mail message: header and body split at the first blank
// line (no blank line means the whole message is body), markup tags stripped
// from the body, everything lowercased and segmented on non-alphanumeric
// boundaries, tokens shorter than 2 dropped. Never throws; degenerate input
// yields an empty list.
TokenList preprocess_email(const std::string& raw);

// Stratified-by-label deterministic split. Same (samples, ratio, seed) always
// produces the identical split. Throws DegenerateSplit if either class would
// get zero training samples.
SplitCorpus split_train_test(const std::vector<LabeledSample>& samples, double ratio,
                             std::uint64_t seed);

}  // namespace ais
