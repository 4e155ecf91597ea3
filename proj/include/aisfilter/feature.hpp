#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ais {

enum class Class : std::uint8_t { Spam, NonSpam };

inline const char* to_string(Class c) { return c == Class::Spam ? "spam" : "nonspam"; }

// One e-mail as an ordered list of lowercase word tokens.
using TokenList = std::vector<std::string>;

// One e-mail as a fixed-length numeric attribute vector (57 for Spambase rows).
using NumericVector = std::vector<double>;

// Variable-length representation of one e-mail. The two corpora feed different
// alternatives; everything downstream handles both.
using FeatureVector = std::variant<TokenList, NumericVector>;

inline bool is_numeric(const FeatureVector& v) {
    return std::holds_alternative<NumericVector>(v);
}
inline bool is_token(const FeatureVector& v) {
    return std::holds_alternative<TokenList>(v);
}

inline std::size_t length(const FeatureVector& v) {
    return is_numeric(v) ? std::get<NumericVector>(v).size()
                         : std::get<TokenList>(v).size();
}

struct LabeledSample {
    FeatureVector vector;
    Class label = Class::NonSpam;
    std::string id;  // stable opaque identifier ("row-17", file stem, ...)
};

}  // namespace ais
