#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fpg/errors.hpp"

namespace fpg {

inline constexpr double kNegInfDbm = -std::numeric_limits<double>::infinity();

inline double dbm_to_watts(double dbm) {
    return std::isinf(dbm) && dbm < 0.0 ? 0.0 : 1e-3 * std::pow(10.0, dbm / 10.0);
}

inline double watts_to_dbm(double w) {
    return w <= 0.0 ? kNegInfDbm : 10.0 * std::log10(w / 1e-3);
}

// Free-space path loss, d in km, f in MHz.
inline double path_loss_db(double d_km, double f_mhz) {
    if (!(d_km > 0.0)) throw DomainError("path_loss_db: distance must be > 0");
    if (!(f_mhz > 0.0)) throw DomainError("path_loss_db: frequency must be > 0");
    return 32.44 + 20.0 * std::log10(d_km) + 20.0 * std::log10(f_mhz);
}

// Integrated thermal noise floor from a spectral density in dBm/Hz.
inline double noise_floor_dbm(double density_dbm_hz, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) throw DomainError("noise_floor_dbm: bandwidth must be > 0");
    return density_dbm_hz + 10.0 * std::log10(bandwidth_hz);
}

// ---------------------------------------------------------------------------
// Frequency grid

struct FrequencyGrid {
    std::vector<double> points_mhz;

    static FrequencyGrid uniform(double f_min = 150.0, double f_max = 250.0,
                                 int n = 15) {
        FrequencyGrid g;
        g.points_mhz.resize(n);
        for (int i = 0; i < n; ++i)
            g.points_mhz[i] = f_min + (f_max - f_min) * i / (n - 1);
        return g;
    }

    void validate() const {
        if (points_mhz.size() != 15)
            throw ConfigError("frequency grid must have exactly 15 points");
        for (size_t i = 0; i < points_mhz.size(); ++i) {
            if (points_mhz[i] < 150.0 || points_mhz[i] > 250.0)
                throw ConfigError("frequency grid point outside [150, 250] MHz");
            if (i > 0 && !(points_mhz[i] > points_mhz[i - 1]))
                throw ConfigError("frequency grid must be strictly increasing");
        }
    }

    double min() const { return points_mhz.front(); }
    double max() const { return points_mhz.back(); }
    double span() const { return max() - min(); }

    // Normalized position of f over the grid span, clamped to [0,1].
    double normalize(double f_mhz) const {
        return std::clamp((f_mhz - min()) / span(), 0.0, 1.0);
    }

    double lerp(double u01) const { return min() + std::clamp(u01, 0.0, 1.0) * span(); }

    int nearest_index(double f_mhz) const {
        int best = 0;
        double best_d = std::abs(points_mhz[0] - f_mhz);
        for (size_t i = 1; i < points_mhz.size(); ++i) {
            const double d = std::abs(points_mhz[i] - f_mhz);
            if (d < best_d) { best_d = d; best = static_cast<int>(i); }
        }
        return best;
    }

    size_t size() const { return points_mhz.size(); }
    double operator[](size_t i) const { return points_mhz[i]; }
};

// ---------------------------------------------------------------------------
// Jamming models

enum class JammingType { single_tone, narrowband, broadband, comb };

inline double jamming_k(JammingType t) {
    switch (t) {
    case JammingType::single_tone: return 1.5;
    case JammingType::narrowband:  return 1.2;
    case JammingType::broadband:   return 0.4;
    case JammingType::comb:        return 0.8;
    }
    return 1.0;
}

inline const char* jamming_type_name(JammingType t) {
    switch (t) {
    case JammingType::single_tone: return "single_tone";
    case JammingType::narrowband:  return "narrowband";
    case JammingType::broadband:   return "broadband";
    case JammingType::comb:        return "comb";
    }
    return "?";
}

inline JammingType jamming_type_from_name(const std::string& s) {
    if (s == "single_tone") return JammingType::single_tone;
    if (s == "narrowband") return JammingType::narrowband;
    if (s == "broadband") return JammingType::broadband;
    if (s == "comb") return JammingType::comb;
    throw ConfigError("unknown jamming type: " + s);
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

// Sorts and merges overlapping intervals in place.
inline void merge_intervals(std::vector<Interval>& iv) {
    std::sort(iv.begin(), iv.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    size_t w = 0;
    for (size_t i = 0; i < iv.size(); ++i) {
        if (w > 0 && iv[i].lo <= iv[w - 1].hi)
            iv[w - 1].hi = std::max(iv[w - 1].hi, iv[i].hi);
        else
            iv[w++] = iv[i];
    }
    iv.resize(w);
}

// One of the four spectral jamming shapes plus its transmit power. Only the
// fields of the active type are meaningful.
struct JammingSpec {
    JammingType type = JammingType::single_tone;
    double power_dbm = 20.0;

    // single tone: an impulse at tone_mhz, widened to a tooth for overlap math
    double tone_mhz = 200.0;
    double tone_width_mhz = 0.2;
    // narrowband: [nb_center - nb_width/2, nb_center + nb_width/2]
    double nb_center_mhz = 200.0;
    double nb_width_mhz = 10.0;
    // broadband: [bb_min, bb_max]
    double bb_min_mhz = 150.0;
    double bb_max_mhz = 250.0;
    // comb: teeth at comb_f0 + n*comb_spacing, n = 0..comb_teeth-1
    double comb_f0_mhz = 150.0;
    double comb_spacing_mhz = 10.0;
    int comb_teeth = 11;
    double comb_tooth_mhz = 1.0;

    static JammingSpec single_tone(double f, double tooth = 0.2, double p = 20.0) {
        JammingSpec j;
        j.type = JammingType::single_tone;
        j.tone_mhz = f;
        j.tone_width_mhz = tooth;
        j.power_dbm = p;
        return j;
    }
    static JammingSpec narrowband(double fc, double width = 10.0, double p = 20.0) {
        JammingSpec j;
        j.type = JammingType::narrowband;
        j.nb_center_mhz = fc;
        j.nb_width_mhz = width;
        j.power_dbm = p;
        return j;
    }
    static JammingSpec broadband(double lo, double hi, double p = 20.0) {
        JammingSpec j;
        j.type = JammingType::broadband;
        j.bb_min_mhz = lo;
        j.bb_max_mhz = hi;
        j.power_dbm = p;
        return j;
    }
    static JammingSpec comb(double f0, double spacing = 10.0, int teeth = 11,
                            double tooth = 1.0, double p = 20.0) {
        JammingSpec j;
        j.type = JammingType::comb;
        j.comb_f0_mhz = f0;
        j.comb_spacing_mhz = spacing;
        j.comb_teeth = teeth;
        j.comb_tooth_mhz = tooth;
        j.power_dbm = p;
        return j;
    }

    double k() const { return jamming_k(type); }

    // Spectral support as a merged, sorted interval list.
    std::vector<Interval> support() const {
        std::vector<Interval> iv;
        switch (type) {
        case JammingType::single_tone:
            iv.push_back({tone_mhz - tone_width_mhz / 2.0,
                          tone_mhz + tone_width_mhz / 2.0});
            break;
        case JammingType::narrowband:
            iv.push_back({nb_center_mhz - nb_width_mhz / 2.0,
                          nb_center_mhz + nb_width_mhz / 2.0});
            break;
        case JammingType::broadband:
            iv.push_back({bb_min_mhz, bb_max_mhz});
            break;
        case JammingType::comb:
            for (int n = 0; n < comb_teeth; ++n) {
                const double c = comb_f0_mhz + n * comb_spacing_mhz;
                iv.push_back({c - comb_tooth_mhz / 2.0, c + comb_tooth_mhz / 2.0});
            }
            break;
        }
        merge_intervals(iv);
        return iv;
    }

    // Midpoint of the occupied band; the broadband avoidance rule measures
    // distance from this.
    double center_mhz() const {
        switch (type) {
        case JammingType::single_tone: return tone_mhz;
        case JammingType::narrowband:  return nb_center_mhz;
        case JammingType::broadband:   return (bb_min_mhz + bb_max_mhz) / 2.0;
        case JammingType::comb:
            return comb_f0_mhz + (comb_teeth - 1) * comb_spacing_mhz / 2.0;
        }
        return 0.0;
    }

    void validate() const {
        if (type == JammingType::broadband && !(bb_min_mhz < bb_max_mhz))
            throw ConfigError("broadband jam needs f_min < f_max");
        if (type == JammingType::narrowband && !(nb_width_mhz > 0.0))
            throw ConfigError("narrowband jam needs positive width");
        if (type == JammingType::comb) {
            if (!(comb_spacing_mhz > 0.0))
                throw ConfigError("comb jam needs positive tooth spacing");
            if (comb_teeth < 1) throw ConfigError("comb jam needs at least 1 tooth");
        }
        const auto sup = support();
        const bool intersects = std::any_of(
            sup.begin(), sup.end(),
            [](const Interval& i) { return i.hi >= 100.0 && i.lo <= 300.0; });
        if (!intersects)
            throw ConfigError("jam support does not intersect [100, 300] MHz");
    }
};

struct AllyChannel {
    double center_mhz = 200.0;
    double bandwidth_mhz = 5.0; // 5 narrow, 2400 spread in the default setup
    bool spread = false;

    Interval band() const {
        return {center_mhz - bandwidth_mhz / 2.0, center_mhz + bandwidth_mhz / 2.0};
    }
};

// Fraction of the ally channel covered by the jammer support, in [0, 1].
inline double band_overlap_fraction(const JammingSpec& jam, const AllyChannel& ch) {
    const Interval band = ch.band();
    double covered = 0.0;
    for (const Interval& iv : jam.support()) {
        const double lo = std::max(iv.lo, band.lo);
        const double hi = std::min(iv.hi, band.hi);
        if (hi > lo) covered += hi - lo;
    }
    return std::clamp(covered / band.width(), 0.0, 1.0);
}

// Same overlap computed from an already-extracted support list (used when
// re-deriving metrics from logs, where only the band intervals survive).
inline double band_overlap_fraction(const std::vector<Interval>& support,
                                    const AllyChannel& ch) {
    const Interval band = ch.band();
    double covered = 0.0;
    for (const Interval& iv : support) {
        const double lo = std::max(iv.lo, band.lo);
        const double hi = std::min(iv.hi, band.hi);
        if (hi > lo) covered += hi - lo;
    }
    return std::clamp(covered / band.width(), 0.0, 1.0);
}

// Interference power reaching the ally receiver: k scales the linear
// transmit power, the overlap fraction keeps only the in-band share, the
// path loss attenuates. Zero overlap means no interference at all.
inline double interference_power_dbm(const JammingSpec& jam, double l_opponent_db,
                                     double overlap) {
    if (!(overlap >= 0.0 && overlap <= 1.0))
        throw DomainError("overlap fraction outside [0,1]");
    if (overlap == 0.0) return kNegInfDbm;
    const double w = jam.k() * dbm_to_watts(jam.power_dbm) * overlap;
    return watts_to_dbm(w) - l_opponent_db;
}

enum class LinkMode {
    conventional, // signal = P_base - L_base; interference only in the SINR denominator
    literal       // signal additionally loses the interference power (Eq. 2 as printed)
};

inline const char* link_mode_name(LinkMode m) {
    return m == LinkMode::conventional ? "conventional" : "literal";
}

inline LinkMode link_mode_from_name(const std::string& s) {
    if (s == "conventional") return LinkMode::conventional;
    if (s == "literal") return LinkMode::literal;
    throw ConfigError("unknown link mode: " + s);
}

// Received signal power at the ally. In literal mode the subtraction happens
// in the linear power domain and non-positive results are floored.
inline double received_power_dbm(double p_base_dbm, double l_base_db,
                                 double n_i_dbm,
                                 LinkMode mode = LinkMode::conventional,
                                 double floor_dbm = -200.0) {
    const double signal_dbm = p_base_dbm - l_base_db;
    if (mode == LinkMode::conventional) return signal_dbm;
    const double w = dbm_to_watts(signal_dbm) - dbm_to_watts(n_i_dbm);
    if (w <= 0.0) return floor_dbm;
    return std::max(watts_to_dbm(w), floor_dbm);
}

// SINR in dB. N_i of -inf contributes nothing to the denominator.
inline double snr_db(double i_dbm, double n0_dbm, double n_i_dbm) {
    const double sig = dbm_to_watts(i_dbm);
    const double denom = dbm_to_watts(n0_dbm) + dbm_to_watts(n_i_dbm);
    if (sig <= 0.0) return kNegInfDbm;
    return 10.0 * std::log10(sig / denom);
}

// Shannon capacity in bit/s over bandwidth B.
inline double channel_capacity(double bandwidth_hz, double i_dbm, double n0_dbm,
                               double n_i_dbm) {
    if (!(bandwidth_hz > 0.0)) throw DomainError("channel_capacity: bandwidth must be > 0");
    const double sig = dbm_to_watts(i_dbm);
    const double denom = dbm_to_watts(n0_dbm) + dbm_to_watts(n_i_dbm);
    return bandwidth_hz * std::log2(1.0 + sig / denom);
}

// Complete link budget for one tick.
struct LinkBudget {
    double p_base_dbm = 0.0;
    double l_base_db = 0.0;
    double p_opponent_dbm = 0.0;
    double l_opponent_db = 0.0;
    double n0_dbm = 0.0;
    double n_i_dbm = kNegInfDbm;
    double i_dbm = 0.0;
    double snr_db = 0.0;
    double capacity_bps = 0.0;
    double overlap = 0.0;
};

} // namespace fpg
