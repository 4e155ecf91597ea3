// Generates the synthetic Spambase-shaped corpus checked in at
// data/spambase.data: same row count, attribute count, attribute scales, and
// label balance as the UCI original (4601 rows, 57 attributes, 1813 spam).
// Class structure is three archetypes: spam (all spam-signal attributes
// elevated), plain ham (ham-signal attributes elevated), and borderline ham
// (promotional but legitimate mail that elevates a random subset of the
// spam-signal attributes at a random intensity). Borderline rows are what
// create false positives: each one resembles spam along its own attribute
// subset, so the training split never covers every subset/intensity combined
// the test split contains. Deterministic for a given seed.
//
//   make_synth_corpus [--rows N] [--spam N] [--seed S] [--out PATH]

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "aisfilter/rng.hpp"

namespace {

constexpr std::size_t kAttrs = 57;

// Attribute roles, mirroring the Spambase layout (48 word frequencies, 6
// char frequencies, 3 capital-run statistics):
//   spam signal: word slots 0..23, '!' and '$' char slots, the capital runs
//   ham signal:  word slots 24..35
//   common:      word slots 36..47 (vocabulary both classes use)
//   neutral:     the remaining char slots (rare punctuation)
enum class Role { SpamSignal, HamSignal, Common, Neutral };

Role role_of(std::size_t i) {
    if (i < 24 || i == 51 || i == 52 || i >= 54) return Role::SpamSignal;
    if (i < 36) return Role::HamSignal;
    if (i < 48) return Role::Common;
    return Role::Neutral;
}

constexpr std::size_t kSpamSignalCount = 29;

struct GenParams {
    double borderline_ham_frac = 0.28;  // of ham rows
    double mask_p = 0.5;                 // borderline spam-signal inclusion prob
    double lowb_borderline_frac = 0.25; // borderline rows with few ham words
    double subtle_spam_frac = 0.07;     // spam written to dodge the usual cues
    double subtle_mask_p = 0.4;
    double dropout = 0.08;
};

struct RowProfile {
    double spam_level = 0.0;            // intensity on spam-signal attributes
    double ham_level = 0.0;             // intensity on ham-signal attributes
    double common_level = 0.35;
    std::vector<bool> spam_mask;        // which spam-signal attrs are active
};

double gauss(ais::Rng& rng) {
    // Box-Muller, fixed here so the emitted corpus never depends on the
    // implementation-defined std::normal_distribution.
    double u1 = 0.0;
    do {
        u1 = rng.real();
    } while (u1 <= 1e-300);
    const double u2 = rng.real();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

RowProfile make_profile(ais::Rng& rng, bool spam, const GenParams& p) {
    RowProfile r;
    r.spam_mask.assign(kSpamSignalCount, true);
    r.common_level = std::clamp(0.35 + 0.05 * gauss(rng), 0.0, 1.0);
    if (spam) {
        r.ham_level = std::clamp(0.06 + 0.03 * gauss(rng), 0.0, 0.2);
        if (rng.real() < p.subtle_spam_frac) {
            // Low-key wording, odd vocabulary, only part of the usual cues.
            // These dodge detection and cost recall, not precision.
            r.spam_level = 0.55 + 0.25 * rng.real();
            r.common_level = 0.45 + 0.30 * rng.real();
            r.ham_level = rng.real(0.1, 0.5);
            for (std::size_t i = 0; i < kSpamSignalCount; ++i) {
                r.spam_mask[i] = rng.real() < p.subtle_mask_p;
            }
            return r;
        }
        const double u = rng.real();
        r.spam_level = 1.0 - 0.35 * u * u;
        return r;
    }
    if (rng.real() < p.borderline_ham_frac) {
        const double v = rng.real();
        r.spam_level = 0.5 + 0.5 * std::pow(v, 4.0);
        // Per-row vocabulary density: how much of the spam wordlist this
        // newsletter happens to use.
        const double mask_p = p.mask_p + rng.real(-0.07, 0.13);
        for (std::size_t i = 0; i < kSpamSignalCount; ++i) {
            r.spam_mask[i] = rng.real() < mask_p;
        }
        const bool low_ham_words = rng.real() < p.lowb_borderline_frac;
        const double center = low_ham_words ? 0.35 : 0.70;
        r.ham_level = std::clamp(center + 0.09 * gauss(rng), 0.1, 1.0);
    } else {
        r.spam_level = rng.real(0.02, 0.06);
        r.ham_level = std::clamp(0.70 + 0.10 * gauss(rng), 0.1, 1.0);
    }
    return r;
}

struct AttrModel {
    double sigma = 0.05;  // per-attribute noise, drives how sharply it matches
    double scale = 5.0;   // raw-value scale (word freqs vs char freqs vs runs)
};

std::vector<AttrModel> make_attr_models(ais::Rng& rng) {
    std::vector<AttrModel> models(kAttrs);
    for (std::size_t i = 0; i < kAttrs; ++i) {
        AttrModel& m = models[i];
        switch (role_of(i)) {
            case Role::SpamSignal: m.sigma = rng.real(0.02, 0.10); break;
            case Role::HamSignal: m.sigma = rng.real(0.03, 0.08); break;
            case Role::Common: m.sigma = rng.real(0.015, 0.035); break;
            case Role::Neutral: m.sigma = 0.0; break;
        }
        if (i < 48) {
            m.scale = rng.real(1.5, 12.0);  // word frequencies (percent)
        } else if (i < 54) {
            m.scale = rng.real(0.4, 5.0);   // char frequencies
        } else if (i == 54) {
            m.scale = 40.0;                 // capital run average
        } else if (i == 55) {
            m.scale = 400.0;                // capital run longest
        } else {
            m.scale = 4000.0;               // capital run total
        }
    }
    return models;
}

double attr_value(ais::Rng& rng, const RowProfile& r, std::size_t i, const AttrModel& m,
                  const GenParams& p) {
    if (role_of(i) == Role::Neutral) {
        // Rare punctuation: mostly absent in every archetype.
        return rng.real() < 0.8 ? 0.0 : rng.real(0.1, 0.6);
    }
    double level = 0.0;
    std::size_t spam_idx = 0;
    switch (role_of(i)) {
        case Role::SpamSignal: {
            // Stable index of this attribute within the spam-signal group.
            for (std::size_t k = 0; k < i; ++k) {
                if (role_of(k) == Role::SpamSignal) ++spam_idx;
            }
            level = r.spam_mask[spam_idx] ? r.spam_level : 0.02;
            break;
        }
        case Role::HamSignal: level = r.ham_level; break;
        case Role::Common: level = r.common_level; break;
        case Role::Neutral: break;
    }
    if (rng.real() < p.dropout) return 0.0;
    return std::clamp(level + m.sigma * gauss(rng), 0.0, 1.0);
}

std::string format_value(double raw, std::size_t attr) {
    char buf[32];
    if (attr >= 55) {
        std::snprintf(buf, sizeof(buf), "%.0f", raw);  // integer run lengths
    } else {
        std::snprintf(buf, sizeof(buf), "%.3f", raw);
    }
    // Trim trailing zeros the way the original file formats values.
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t rows = 4601;
    std::size_t spam_rows = 1813;
    std::uint64_t seed = 20240901;
    std::string out_path = "data/spambase.data";

    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* name) -> std::string {
            if (i + 1 >= argc) {
                std::cerr << name << " needs a value\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--rows") {
            rows = std::stoull(next("--rows"));
        } else if (arg == "--spam") {
            spam_rows = std::stoull(next("--spam"));
        } else if (arg == "--seed") {
            seed = std::stoull(next("--seed"));
        } else if (arg == "--out") {
            out_path = next("--out");
        } else {
            std::cerr << "usage: make_synth_corpus [--rows N] [--spam N] [--seed S] [--out PATH]\n";
            return 1;
        }
    }
    if (spam_rows > rows) {
        std::cerr << "--spam cannot exceed --rows\n";
        return 1;
    }

    const GenParams params;
    ais::Rng rng(ais::mix64(seed));
    const auto models = make_attr_models(rng);

    std::vector<bool> labels(rows, false);
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(spam_rows), true);
    rng.shuffle(labels);

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        const RowProfile profile = make_profile(rng, labels[r], params);
        for (std::size_t i = 0; i < kAttrs; ++i) {
            const double z = attr_value(rng, profile, i, models[i], params);
            double raw = z * models[i].scale;
            if (i >= 54) raw += 1.0;  // capital runs are always at least 1
            out << format_value(raw, i) << ',';
        }
        out << (labels[r] ? '1' : '0') << '\n';
    }
    std::cout << "wrote " << rows << " rows (" << spam_rows << " spam) to " << out_path << "\n";
    return 0;
}
