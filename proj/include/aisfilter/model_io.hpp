#pragma once

#include <string>

#include "aisfilter/config.hpp"
#include "aisfilter/detectors.hpp"

namespace ais {

// Versioned on-disk model: config snapshot, normalization parameters, and the
// combined detector. Doubles are serialized shortest-round-trip, so a reloaded
// model reproduces every decision bit for bit.
struct ModelFile {
    static constexpr int kFormatVersion = 1;
    Config config;
    CombinedDetector combined;
};

std::string to_json(const ModelFile& model);
ModelFile model_from_json(const std::string& text);

// Writes via temp file + rename in the target directory, so readers never see
// a partially written model.
void save_model(const ModelFile& model, const std::string& path);
ModelFile load_model(const std::string& path);

}  // namespace ais
