#pragma once

#include <stdexcept>
#include <string>

namespace ais {

// Base for every error this library throws on its own behalf.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// corpus
struct MalformedRow : Error {
    MalformedRow(std::size_t row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row(row) {}
    std::size_t row;
};
struct EmptyFile : Error {
    explicit EmptyFile(const std::string& path) : Error("empty corpus file: " + path) {}
};
struct DegenerateSplit : Error {
    explicit DegenerateSplit(const std::string& what) : Error(what) {}
};

// affinity
struct VariantMismatch : Error {
    VariantMismatch() : Error("feature vectors have different representations") {}
};
struct EmptyVector : Error {
    EmptyVector() : Error("affinity of an empty feature vector is undefined") {}
};
struct LengthMismatch : Error {
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("numeric vectors differ in length: " + std::to_string(a) + " vs " +
                std::to_string(b)) {}
};

// detectors
struct NoDetectorsGenerated : Error {
    explicit NoDetectorsGenerated(const std::string& what) : Error(what) {}
};
struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& what) : Error(what) {}
};
struct EmptySpamSet : Error {
    EmptySpamSet()
        : Error("cross-pruning removed every spam detector (cross_theta too low)") {}
};

// eval
struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error(what) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// cli / persistence
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};
struct ModelError : Error {
    explicit ModelError(const std::string& what) : Error(what) {}
};

}  // namespace ais
