#pragma once

#include <cmath>
#include <deque>
#include <optional>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/radio.hpp"
#include "fpg/rng.hpp"

namespace fpg {

struct SpectrumSample {
    double freq_mhz = 0.0;
    double power_dbm = kNegInfDbm;
};

// Interference power observed across the grid neighborhood, frequencies
// ascending.
struct SpectrumObservation {
    std::vector<SpectrumSample> samples;

    void validate() const {
        for (size_t i = 1; i < samples.size(); ++i)
            if (!(samples[i].freq_mhz > samples[i - 1].freq_mhz))
                throw ObservationError("spectrum samples must be sorted ascending");
    }
};

// Noise-free observation of a jam at the grid frequencies: hot where the
// grid point falls inside the jam support.
inline SpectrumObservation make_grid_observation(const JammingSpec& jam,
                                                 const FrequencyGrid& grid,
                                                 double hot_dbm = -30.0) {
    SpectrumObservation obs;
    const auto sup = jam.support();
    for (size_t i = 0; i < grid.size(); ++i) {
        const double f = grid[i];
        bool hot = false;
        for (const Interval& iv : sup)
            if (f >= iv.lo && f <= iv.hi) { hot = true; break; }
        obs.samples.push_back({f, hot ? hot_dbm : kNegInfDbm});
    }
    return obs;
}

// Rule-based spectral shape classification over grid samples. The rules are
// checked in order: single hot sample, near-total coverage, equally spaced
// teeth, short contiguous run. Anything else is unclassifiable.
inline std::optional<JammingType> classify_jamming(const SpectrumObservation& obs,
                                                   double threshold_dbm) {
    if (obs.samples.size() < 15)
        throw ObservationError("classification needs at least 15 spectrum samples");
    obs.validate();

    std::vector<size_t> hot;
    for (size_t i = 0; i < obs.samples.size(); ++i)
        if (obs.samples[i].power_dbm > threshold_dbm) hot.push_back(i);

    const size_t n = obs.samples.size();
    if (hot.size() == 1) return JammingType::single_tone;
    if (hot.size() >= (n * 4 + 4) / 5) return JammingType::broadband; // >= 80%

    if (hot.size() >= 3) {
        double mean = 0.0;
        std::vector<double> gaps;
        for (size_t i = 1; i < hot.size(); ++i) {
            gaps.push_back(obs.samples[hot[i]].freq_mhz -
                           obs.samples[hot[i - 1]].freq_mhz);
            mean += gaps.back();
        }
        mean /= gaps.size();
        double var = 0.0;
        for (double g : gaps) var += (g - mean) * (g - mean);
        var /= gaps.size();
        if (var < 1e-6) return JammingType::comb;
    }

    if (hot.size() >= 2 && hot.size() <= 4) {
        bool contiguous = true;
        for (size_t i = 1; i < hot.size(); ++i)
            if (hot[i] != hot[i - 1] + 1) { contiguous = false; break; }
        if (contiguous) return JammingType::narrowband;
    }

    return std::nullopt;
}

enum class CounterAction { hop, spread, despread, stay };

struct CounterStrategy {
    CounterAction action = CounterAction::stay;
    double hop_target_mhz = 0.0; // valid when action == hop
    bool despread_first = false; // hop after leaving spread mode
    const char* rationale_tag = "";
};

// Expert counter-frequency rules: one entry per jamming type. The exclusion
// predicate is zero band overlap with the jam support; broadband prefers the
// clean channel farthest from the jam band, everything else hops
// pseudo-randomly among clean channels.
class KnowledgeBase {
public:
    struct Rule {
        bool maximize_distance = false;
        const char* tag = "";
    };

    KnowledgeBase() = default;

    const Rule& rule_for(JammingType t) const {
        switch (t) {
        case JammingType::single_tone: return rules_[0];
        case JammingType::narrowband:  return rules_[1];
        case JammingType::broadband:   return rules_[2];
        case JammingType::comb:        return rules_[3];
        }
        return rules_[0];
    }

    // Remembers a detected opponent jam frequency (most recent last).
    void note_jam_frequency(double f_mhz) {
        history_.push_back(f_mhz);
        while (history_.size() > history_cap_) history_.pop_front();
    }

    const std::deque<double>& history() const { return history_; }

    // Counter-strategy for the observed jam. Read-only on the KB; the hop
    // draw comes from the caller's RNG so concurrent readers stay safe.
    CounterStrategy recommend(const JammingSpec& jam, const FrequencyGrid& grid,
                              const AllyChannel& ch, Rng& rng,
                              double clean_bandwidth_mhz = 5.0) const {
        std::vector<int> clean;
        for (size_t i = 0; i < grid.size(); ++i) {
            AllyChannel cand{grid[i], clean_bandwidth_mhz, false};
            if (band_overlap_fraction(jam, cand) == 0.0)
                clean.push_back(static_cast<int>(i));
        }

        const Rule& rule = rule_for(jam.type);
        if (clean.empty()) {
            // no interference-free channel; disperse the signal instead
            return {CounterAction::spread, 0.0, false, rule.tag};
        }

        int pick;
        if (rule.maximize_distance) {
            const double mid = jam.center_mhz();
            pick = clean[0];
            double best = std::abs(grid[clean[0]] - mid);
            for (int idx : clean) {
                const double d = std::abs(grid[idx] - mid);
                if (d > best) { best = d; pick = idx; } // ties keep the lower frequency
            }
        } else {
            pick = clean[rng.uniform_int(static_cast<int>(clean.size()))];
        }

        CounterStrategy s;
        s.action = CounterAction::hop;
        s.hop_target_mhz = grid[pick];
        s.despread_first = ch.spread;
        s.rationale_tag = rule.tag;
        return s;
    }

    // Fallback when the jam shape could not be identified.
    CounterStrategy recommend_unknown() const {
        return {CounterAction::spread, 0.0, false, "unknown"};
    }

private:
    Rule rules_[4] = {
        {false, "single_tone"},
        {false, "narrowband"},
        {true, "broadband"},
        {false, "comb"},
    };
    std::deque<double> history_;
    size_t history_cap_ = 32;
};

} // namespace fpg
