#include "aisfilter/model_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aisfilter/errors.hpp"

namespace ais {

namespace {

using nlohmann::ordered_json;

ordered_json config_to_json(const Config& c) {
    ordered_json j;
    j["theta"] = c.theta;
    j["tau"] = c.tau;
    if (c.cross_theta) {
        j["cross_theta"] = *c.cross_theta;
    } else {
        j["cross_theta"] = nullptr;
    }
    j["min_separation"] = c.min_separation;
    j["target_count"] = c.target_count;
    j["max_attempts"] = c.max_attempts;
    j["split_ratio"] = c.split_ratio;
    j["seed"] = c.seed;
    j["mode"] = to_string(c.mode);
    return j;
}

Config config_from_json(const ordered_json& j) {
    Config c;
    c.theta = j.at("theta").get<double>();
    c.tau = j.at("tau").get<double>();
    if (!j.at("cross_theta").is_null()) c.cross_theta = j.at("cross_theta").get<double>();
    c.min_separation = j.at("min_separation").get<double>();
    c.target_count = j.at("target_count").get<std::size_t>();
    c.max_attempts = j.at("max_attempts").get<std::size_t>();
    c.split_ratio = j.at("split_ratio").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "token") {
        c.mode = MatchMode::TokenOverlap;
    } else if (mode == "numeric") {
        c.mode = MatchMode::AttributeInterval;
    } else {
        throw ModelError("unknown mode '" + mode + "' in model file");
    }
    return c;
}

ordered_json center_to_json(const FeatureVector& v) {
    ordered_json j;
    if (is_token(v)) {
        j["tokens"] = std::get<TokenList>(v);
    } else {
        j["values"] = std::get<NumericVector>(v);
    }
    return j;
}

FeatureVector center_from_json(const ordered_json& j) {
    if (j.contains("tokens")) return j.at("tokens").get<TokenList>();
    if (j.contains("values")) return j.at("values").get<NumericVector>();
    throw ModelError("detector center has neither tokens nor values");
}

ordered_json set_to_json(const DetectorSet& set) {
    ordered_json j;
    j["class"] = to_string(set.cls);
    ordered_json dets = ordered_json::array();
    for (const auto& d : set.detectors) {
        ordered_json dj;
        dj["id"] = d.id;
        dj["center"] = center_to_json(d.center);
        if (d.radius_override) {
            dj["radius_override"] = *d.radius_override;
        } else {
            dj["radius_override"] = nullptr;
        }
        dj["matched_count"] = d.matched_count;
        dj["detected_count"] = d.detected_count;
        dets.push_back(std::move(dj));
    }
    j["detectors"] = std::move(dets);
    ordered_json stats;
    stats["attempts"] = set.stats.attempts;
    stats["accepted"] = set.stats.accepted;
    stats["rejected_censoring"] = set.stats.rejected_censoring;
    stats["rejected_spreading"] = set.stats.rejected_spreading;
    j["generation_stats"] = std::move(stats);
    return j;
}

DetectorSet set_from_json(const ordered_json& j, const MatchRule& rule,
                          const Normalization& norm) {
    DetectorSet set;
    set.rule = rule;
    set.normalization = norm;
    const std::string cls = j.at("class").get<std::string>();
    if (cls == "spam") {
        set.cls = Class::Spam;
    } else if (cls == "nonspam") {
        set.cls = Class::NonSpam;
    } else {
        throw ModelError("unknown detector class '" + cls + "'");
    }
    for (const auto& dj : j.at("detectors")) {
        Detector d;
        d.id = dj.at("id").get<std::string>();
        d.center = center_from_json(dj.at("center"));
        if (!dj.at("radius_override").is_null()) {
            d.radius_override = dj.at("radius_override").get<double>();
        }
        d.matched_count = dj.at("matched_count").get<std::uint64_t>();
        d.detected_count = dj.at("detected_count").get<std::uint64_t>();
        d.cls = set.cls;
        set.detectors.push_back(std::move(d));
    }
    if (j.contains("generation_stats")) {
        const auto& stats = j.at("generation_stats");
        set.stats.attempts = stats.at("attempts").get<std::size_t>();
        set.stats.accepted = stats.at("accepted").get<std::size_t>();
        set.stats.rejected_censoring = stats.at("rejected_censoring").get<std::size_t>();
        set.stats.rejected_spreading = stats.at("rejected_spreading").get<std::size_t>();
    }
    return set;
}

}  // namespace

std::string to_json(const ModelFile& model) {
    ordered_json j;
    j["format_version"] = ModelFile::kFormatVersion;
    j["config"] = config_to_json(model.config);
    const Normalization& norm = model.combined.spam_set.normalization;
    if (norm.empty()) {
        j["normalization"] = nullptr;
    } else {
        ordered_json nj;
        nj["mins"] = norm.mins;
        nj["maxs"] = norm.maxs;
        j["normalization"] = std::move(nj);
    }
    j["cross_theta"] = model.combined.cross_theta;
    j["pruned_ids"] = model.combined.pruned_ids;
    j["spam_set"] = set_to_json(model.combined.spam_set);
    j["nonspam_set"] = set_to_json(model.combined.nonspam_set);
    return j.dump(2) + "\n";
}

ModelFile model_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        const int version = j.at("format_version").get<int>();
        if (version != ModelFile::kFormatVersion) {
            throw ModelError("unsupported model format version " + std::to_string(version));
        }
        ModelFile model;
        model.config = config_from_json(j.at("config"));
        Normalization norm;
        if (!j.at("normalization").is_null()) {
            norm.mins = j.at("normalization").at("mins").get<std::vector<double>>();
            norm.maxs = j.at("normalization").at("maxs").get<std::vector<double>>();
        }
        const MatchRule rule = model.config.rule();
        model.combined.cross_theta = j.at("cross_theta").get<double>();
        model.combined.pruned_ids = j.at("pruned_ids").get<std::vector<std::string>>();
        model.combined.spam_set = set_from_json(j.at("spam_set"), rule, norm);
        model.combined.nonspam_set = set_from_json(j.at("nonspam_set"), rule, norm);
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model file is missing fields: ") + e.what());
    }
}

void save_model(const ModelFile& model, const std::string& path) {
    namespace fs = std::filesystem;
    const std::string payload = to_json(model);
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ModelError("cannot write model file: " + tmp.string());
        out << payload;
        out.flush();
        if (!out) throw ModelError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ModelError("cannot rename " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

}  // namespace ais
