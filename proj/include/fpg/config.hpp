#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpg/errors.hpp"
#include "fpg/geom.hpp"
#include "fpg/radio.hpp"
#include "fpg/trajectory.hpp"

namespace fpg {

using json = nlohmann::json;

struct WorldConfig {
    WorldBounds bounds;
    double dt = 1.0;
    double max_speed = 10.0;
    long episode_length = 1000; // steps
    long total_steps = 5000;
    Vec3 base_station{750.0, 750.0, 0.0};
    Vec3 opponent_start{1150.0, 750.0, 300.0};
    TrajectorySpec ally_trajectory;
    TrajectorySpec opponent_trajectory;

    MotionLimits limits() const { return {max_speed, dt}; }
};

struct RadioConfig {
    double p_base_dbm = 45.0;
    double p_opponent_dbm = 20.0;
    double noise_density_dbm_hz = -170.0;
    double bandwidth_mhz = 5.0;
    double spread_bandwidth_mhz = 2400.0;
    double grid_min_mhz = 150.0;
    double grid_max_mhz = 250.0;
    int grid_points = 15;
    LinkMode link_mode = LinkMode::conventional;
    double power_floor_dbm = -200.0;
    double check_interval_s = 5.0;

    FrequencyGrid grid() const {
        return FrequencyGrid::uniform(grid_min_mhz, grid_max_mhz, grid_points);
    }
};

struct CostConfig {
    double hop_cost = 2.0;           // H
    double snr_threshold_db = 8.0;   // M
    double distance_coeff = 1.0;     // E
    double snr_coeff = 0.5;          // alpha
    double proximity_radius_m = 30.0;
};

// Jam shape widths shared by the opponent's transmitter and the expert
// rules that model it.
struct KbConfig {
    bool enabled = true;
    double single_tone_tooth_mhz = 0.2;
    double narrowband_width_mhz = 10.0;
    double broadband_halfwidth_mhz = 30.0;
    double comb_spacing_mhz = 10.0;
    int comb_teeth = 11;
    double comb_tooth_mhz = 1.0;
    double classify_threshold_dbm = -90.0;
};

struct PlannerConfig {
    // Opponent motion source: per-tick pursuit, fixed patrol pattern, or
    // waypoint plans refreshed at episode boundaries (heuristic or llm).
    std::string mode = "pursuit"; // pursuit | pattern | heuristic | llm
    std::string endpoint;
    std::string model = "generic-chat";
    double timeout_s = 30.0;
    int max_retries = 2;
    double temperature = 0.0;
    int waypoints = 10;
    int history_len = 20;
};

struct MaddpgConfig {
    double gamma = 0.99;
    long total_steps = 100000;
    int batch_size = 32;
    double learning_rate = 0.001;
    long buffer_capacity = 1000000;
    double sigma_start = 0.1;
    double sigma_end = 0.01;
    double tau = 0.005;
    int hidden = 64;
};

struct AgentsConfig {
    std::string ally = "kb";        // fixed | random_hop | kb | maddpg
    std::string opponent = "scripted"; // scripted | maddpg
    double random_hop_p = 0.5;
    double random_spread_p = 0.1;
    std::string opponent_jam = "auto"; // auto | single_tone | narrowband | broadband | comb
};

struct ScenarioConfig {
    WorldConfig world;
    RadioConfig radio;
    CostConfig costs;
    KbConfig kb;
    PlannerConfig planner;
    AgentsConfig agents;
    MaddpgConfig maddpg;
    uint64_t seed = 42;

    void validate() const {
        world.bounds.validate();
        world.limits().validate();
        if (world.episode_length < 1) throw ConfigError("world.episode_length must be >= 1");
        if (world.total_steps < 0) throw ConfigError("world.total_steps must be >= 0");
        if (!world.bounds.contains(world.opponent_start))
            throw ConfigError("world.opponent_start outside bounds");
        world.ally_trajectory.validate(world.bounds);
        if (world.ally_trajectory.kind != TrajectorySpec::Kind::bezier)
            throw ConfigError("world.ally_trajectory must be a bezier curve");
        if (world.opponent_trajectory.kind == TrajectorySpec::Kind::bezier ||
            world.opponent_trajectory.kind == TrajectorySpec::Kind::planned)
            throw ConfigError("world.opponent_trajectory must be a closed pattern");
        world.opponent_trajectory.validate(world.bounds);
        radio.grid().validate();
        if (!(radio.bandwidth_mhz > 0.0) || !(radio.spread_bandwidth_mhz > 0.0))
            throw ConfigError("radio bandwidths must be positive");
        if (!(radio.check_interval_s > 0.0))
            throw ConfigError("radio.check_interval_s must be > 0");
        if (costs.hop_cost < 0.0 || costs.distance_coeff < 0.0 || costs.snr_coeff < 0.0)
            throw ConfigError("cost coefficients must be >= 0");
        if (!(costs.proximity_radius_m > 0.0))
            throw ConfigError("costs.proximity_radius_m must be > 0");
        if (planner.mode != "pursuit" && planner.mode != "pattern" &&
            planner.mode != "heuristic" && planner.mode != "llm")
            throw ConfigError("planner.mode must be pursuit|pattern|heuristic|llm");
        if (planner.max_retries < 0) throw ConfigError("planner.max_retries must be >= 0");
        if (planner.waypoints < 1) throw ConfigError("planner.waypoints must be >= 1");
        if (agents.ally != "fixed" && agents.ally != "random_hop" &&
            agents.ally != "kb" && agents.ally != "maddpg")
            throw ConfigError("agents.ally must be fixed|random_hop|kb|maddpg");
        if (agents.opponent != "scripted" && agents.opponent != "maddpg")
            throw ConfigError("agents.opponent must be scripted|maddpg");
        if (agents.opponent_jam != "auto") jamming_type_from_name(agents.opponent_jam);
        if (!(maddpg.gamma > 0.0 && maddpg.gamma < 1.0))
            throw ConfigError("maddpg.gamma must be in (0,1)");
        if (!(maddpg.tau > 0.0 && maddpg.tau <= 1.0))
            throw ConfigError("maddpg.tau must be in (0,1]");
        if (maddpg.batch_size < 1) throw ConfigError("maddpg.batch_size must be >= 1");
        if (maddpg.buffer_capacity < 1) throw ConfigError("maddpg.buffer_capacity must be >= 1");
    }
};

// ---------------------------------------------------------------------------
// JSON binding

namespace detail {

inline json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

inline Vec3 vec3_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError(path + " must be a 3-element array");
    for (const auto& e : j)
        if (!e.is_number()) throw ConfigError(path + " must contain numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline json trajectory_to_json(const TrajectorySpec& t) {
    json j;
    switch (t.kind) {
    case TrajectorySpec::Kind::bezier: {
        j["kind"] = "bezier";
        json pts = json::array();
        for (const auto& p : t.points) pts.push_back(vec3_to_json(p));
        j["control_points"] = pts;
        j["round_trip"] = t.round_trip;
        break;
    }
    case TrajectorySpec::Kind::triangle: {
        j["kind"] = "triangle";
        json pts = json::array();
        for (const auto& p : t.points) pts.push_back(vec3_to_json(p));
        j["vertices"] = pts;
        break;
    }
    case TrajectorySpec::Kind::rectangle: {
        j["kind"] = "rectangle";
        json pts = json::array();
        for (const auto& p : t.points) pts.push_back(vec3_to_json(p));
        j["corners"] = pts;
        break;
    }
    case TrajectorySpec::Kind::circle:
        j["kind"] = "circle";
        j["center"] = vec3_to_json(t.center);
        j["radius"] = t.radius;
        break;
    case TrajectorySpec::Kind::planned:
        j["kind"] = "planned";
        break;
    }
    return j;
}

inline TrajectorySpec trajectory_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError(path + " must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    TrajectorySpec t;
    auto read_points = [&](const char* field, size_t exact) {
        if (!j.contains(field))
            throw ConfigError(path + "." + field + " is required for kind " + kind);
        const json& pts = j.at(field);
        if (!pts.is_array() || (exact > 0 && pts.size() != exact))
            throw ConfigError(path + "." + field + " has the wrong shape");
        std::vector<Vec3> out;
        for (size_t i = 0; i < pts.size(); ++i)
            out.push_back(vec3_from_json(pts[i], path + "." + field));
        return out;
    };
    auto allow_keys = [&](std::initializer_list<const char*> keys) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            bool ok = it.key() == "kind";
            for (const char* k : keys) ok = ok || it.key() == k;
            if (!ok) throw ConfigError("unknown config key: " + path + "." + it.key());
        }
    };
    if (kind == "bezier") {
        allow_keys({"control_points", "round_trip"});
        t.kind = TrajectorySpec::Kind::bezier;
        t.points = read_points("control_points", 0);
        if (j.contains("round_trip")) t.round_trip = j.at("round_trip").get<bool>();
    } else if (kind == "triangle") {
        allow_keys({"vertices"});
        t.kind = TrajectorySpec::Kind::triangle;
        t.points = read_points("vertices", 3);
    } else if (kind == "rectangle") {
        allow_keys({"corners"});
        t.kind = TrajectorySpec::Kind::rectangle;
        t.points = read_points("corners", 4);
    } else if (kind == "circle") {
        allow_keys({"center", "radius"});
        t.kind = TrajectorySpec::Kind::circle;
        if (!j.contains("center") || !j.contains("radius"))
            throw ConfigError(path + " circle needs center and radius");
        t.center = vec3_from_json(j.at("center"), path + ".center");
        t.radius = j.at("radius").get<double>();
    } else {
        throw ConfigError(path + ".kind must be bezier|triangle|rectangle|circle");
    }
    return t;
}

// Rejects any key in `user` that does not exist in `schema`. Trajectory
// nodes are variant-shaped and validated separately.
inline void reject_unknown_keys(const json& user, const json& schema,
                                const std::string& path) {
    if (!user.is_object()) return;
    for (auto it = user.begin(); it != user.end(); ++it) {
        const std::string child = path.empty() ? it.key() : path + "." + it.key();
        if (!schema.is_object() || !schema.contains(it.key()))
            throw ConfigError("unknown config key: " + child);
        if (it.key() == "ally_trajectory" || it.key() == "opponent_trajectory")
            continue;
        reject_unknown_keys(it.value(), schema.at(it.key()), child);
    }
}

template <typename T>
T get_field(const json& j, const std::string& key, const T& fallback,
            const std::string& path) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("bad value type for config key: " +
                          (path.empty() ? key : path + "." + key));
    }
}

} // namespace detail

inline ScenarioConfig default_config() {
    ScenarioConfig c;
    c.world.ally_trajectory.kind = TrajectorySpec::Kind::bezier;
    c.world.ally_trajectory.points = {
        {100.0, 750.0, 300.0},
        {500.0, 100.0, 300.0},
        {1000.0, 1400.0, 300.0},
        {1400.0, 750.0, 300.0},
    };
    c.world.ally_trajectory.round_trip = true;
    c.world.opponent_trajectory.kind = TrajectorySpec::Kind::circle;
    c.world.opponent_trajectory.center = {750.0, 750.0, 300.0};
    c.world.opponent_trajectory.radius = 400.0;
    return c;
}

inline json to_json(const ScenarioConfig& c) {
    json j;
    j["world"]["bounds"] = {c.world.bounds.x_max, c.world.bounds.y_max, c.world.bounds.z_max};
    j["world"]["dt"] = c.world.dt;
    j["world"]["max_speed"] = c.world.max_speed;
    j["world"]["episode_length"] = c.world.episode_length;
    j["world"]["total_steps"] = c.world.total_steps;
    j["world"]["base_station"] = detail::vec3_to_json(c.world.base_station);
    j["world"]["opponent_start"] = detail::vec3_to_json(c.world.opponent_start);
    j["world"]["ally_trajectory"] = detail::trajectory_to_json(c.world.ally_trajectory);
    j["world"]["opponent_trajectory"] = detail::trajectory_to_json(c.world.opponent_trajectory);

    j["radio"]["p_base_dbm"] = c.radio.p_base_dbm;
    j["radio"]["p_opponent_dbm"] = c.radio.p_opponent_dbm;
    j["radio"]["noise_density_dbm_hz"] = c.radio.noise_density_dbm_hz;
    j["radio"]["bandwidth_mhz"] = c.radio.bandwidth_mhz;
    j["radio"]["spread_bandwidth_mhz"] = c.radio.spread_bandwidth_mhz;
    j["radio"]["grid_min_mhz"] = c.radio.grid_min_mhz;
    j["radio"]["grid_max_mhz"] = c.radio.grid_max_mhz;
    j["radio"]["grid_points"] = c.radio.grid_points;
    j["radio"]["link_mode"] = link_mode_name(c.radio.link_mode);
    j["radio"]["power_floor_dbm"] = c.radio.power_floor_dbm;
    j["radio"]["check_interval_s"] = c.radio.check_interval_s;

    j["costs"]["hop_cost"] = c.costs.hop_cost;
    j["costs"]["snr_threshold_db"] = c.costs.snr_threshold_db;
    j["costs"]["distance_coeff"] = c.costs.distance_coeff;
    j["costs"]["snr_coeff"] = c.costs.snr_coeff;
    j["costs"]["proximity_radius_m"] = c.costs.proximity_radius_m;

    j["kb"]["enabled"] = c.kb.enabled;
    j["kb"]["single_tone_tooth_mhz"] = c.kb.single_tone_tooth_mhz;
    j["kb"]["narrowband_width_mhz"] = c.kb.narrowband_width_mhz;
    j["kb"]["broadband_halfwidth_mhz"] = c.kb.broadband_halfwidth_mhz;
    j["kb"]["comb_spacing_mhz"] = c.kb.comb_spacing_mhz;
    j["kb"]["comb_teeth"] = c.kb.comb_teeth;
    j["kb"]["comb_tooth_mhz"] = c.kb.comb_tooth_mhz;
    j["kb"]["classify_threshold_dbm"] = c.kb.classify_threshold_dbm;

    j["planner"]["mode"] = c.planner.mode;
    j["planner"]["endpoint"] = c.planner.endpoint;
    j["planner"]["model"] = c.planner.model;
    j["planner"]["timeout_s"] = c.planner.timeout_s;
    j["planner"]["max_retries"] = c.planner.max_retries;
    j["planner"]["temperature"] = c.planner.temperature;
    j["planner"]["waypoints"] = c.planner.waypoints;
    j["planner"]["history_len"] = c.planner.history_len;

    j["agents"]["ally"] = c.agents.ally;
    j["agents"]["opponent"] = c.agents.opponent;
    j["agents"]["random_hop_p"] = c.agents.random_hop_p;
    j["agents"]["random_spread_p"] = c.agents.random_spread_p;
    j["agents"]["opponent_jam"] = c.agents.opponent_jam;

    j["maddpg"]["gamma"] = c.maddpg.gamma;
    j["maddpg"]["total_steps"] = c.maddpg.total_steps;
    j["maddpg"]["batch_size"] = c.maddpg.batch_size;
    j["maddpg"]["learning_rate"] = c.maddpg.learning_rate;
    j["maddpg"]["buffer_capacity"] = c.maddpg.buffer_capacity;
    j["maddpg"]["sigma_start"] = c.maddpg.sigma_start;
    j["maddpg"]["sigma_end"] = c.maddpg.sigma_end;
    j["maddpg"]["tau"] = c.maddpg.tau;
    j["maddpg"]["hidden"] = c.maddpg.hidden;

    j["seed"] = c.seed;
    return j;
}

// Parses a user config on top of the defaults. Unknown keys are rejected
// with the full dotted path.
inline ScenarioConfig config_from_json(const json& user) {
    const ScenarioConfig defaults = default_config();
    detail::reject_unknown_keys(user, to_json(defaults), "");

    ScenarioConfig c = defaults;
    using detail::get_field;

    if (user.contains("world")) {
        const json& w = user.at("world");
        if (w.contains("bounds")) {
            const Vec3 b = detail::vec3_from_json(w.at("bounds"), "world.bounds");
            c.world.bounds = {b.x, b.y, b.z};
        }
        c.world.dt = get_field(w, "dt", c.world.dt, "world");
        c.world.max_speed = get_field(w, "max_speed", c.world.max_speed, "world");
        c.world.episode_length = get_field(w, "episode_length", c.world.episode_length, "world");
        c.world.total_steps = get_field(w, "total_steps", c.world.total_steps, "world");
        if (w.contains("base_station"))
            c.world.base_station = detail::vec3_from_json(w.at("base_station"), "world.base_station");
        if (w.contains("opponent_start"))
            c.world.opponent_start = detail::vec3_from_json(w.at("opponent_start"), "world.opponent_start");
        if (w.contains("ally_trajectory"))
            c.world.ally_trajectory =
                detail::trajectory_from_json(w.at("ally_trajectory"), "world.ally_trajectory");
        if (w.contains("opponent_trajectory"))
            c.world.opponent_trajectory =
                detail::trajectory_from_json(w.at("opponent_trajectory"), "world.opponent_trajectory");
    }
    if (user.contains("radio")) {
        const json& r = user.at("radio");
        c.radio.p_base_dbm = get_field(r, "p_base_dbm", c.radio.p_base_dbm, "radio");
        c.radio.p_opponent_dbm = get_field(r, "p_opponent_dbm", c.radio.p_opponent_dbm, "radio");
        c.radio.noise_density_dbm_hz =
            get_field(r, "noise_density_dbm_hz", c.radio.noise_density_dbm_hz, "radio");
        c.radio.bandwidth_mhz = get_field(r, "bandwidth_mhz", c.radio.bandwidth_mhz, "radio");
        c.radio.spread_bandwidth_mhz =
            get_field(r, "spread_bandwidth_mhz", c.radio.spread_bandwidth_mhz, "radio");
        c.radio.grid_min_mhz = get_field(r, "grid_min_mhz", c.radio.grid_min_mhz, "radio");
        c.radio.grid_max_mhz = get_field(r, "grid_max_mhz", c.radio.grid_max_mhz, "radio");
        c.radio.grid_points = get_field(r, "grid_points", c.radio.grid_points, "radio");
        if (r.contains("link_mode"))
            c.radio.link_mode = link_mode_from_name(r.at("link_mode").get<std::string>());
        c.radio.power_floor_dbm = get_field(r, "power_floor_dbm", c.radio.power_floor_dbm, "radio");
        c.radio.check_interval_s = get_field(r, "check_interval_s", c.radio.check_interval_s, "radio");
    }
    if (user.contains("costs")) {
        const json& k = user.at("costs");
        c.costs.hop_cost = get_field(k, "hop_cost", c.costs.hop_cost, "costs");
        c.costs.snr_threshold_db = get_field(k, "snr_threshold_db", c.costs.snr_threshold_db, "costs");
        c.costs.distance_coeff = get_field(k, "distance_coeff", c.costs.distance_coeff, "costs");
        c.costs.snr_coeff = get_field(k, "snr_coeff", c.costs.snr_coeff, "costs");
        c.costs.proximity_radius_m =
            get_field(k, "proximity_radius_m", c.costs.proximity_radius_m, "costs");
    }
    if (user.contains("kb")) {
        const json& k = user.at("kb");
        c.kb.enabled = get_field(k, "enabled", c.kb.enabled, "kb");
        c.kb.single_tone_tooth_mhz =
            get_field(k, "single_tone_tooth_mhz", c.kb.single_tone_tooth_mhz, "kb");
        c.kb.narrowband_width_mhz =
            get_field(k, "narrowband_width_mhz", c.kb.narrowband_width_mhz, "kb");
        c.kb.broadband_halfwidth_mhz =
            get_field(k, "broadband_halfwidth_mhz", c.kb.broadband_halfwidth_mhz, "kb");
        c.kb.comb_spacing_mhz = get_field(k, "comb_spacing_mhz", c.kb.comb_spacing_mhz, "kb");
        c.kb.comb_teeth = get_field(k, "comb_teeth", c.kb.comb_teeth, "kb");
        c.kb.comb_tooth_mhz = get_field(k, "comb_tooth_mhz", c.kb.comb_tooth_mhz, "kb");
        c.kb.classify_threshold_dbm =
            get_field(k, "classify_threshold_dbm", c.kb.classify_threshold_dbm, "kb");
    }
    if (user.contains("planner")) {
        const json& p = user.at("planner");
        c.planner.mode = get_field(p, "mode", c.planner.mode, "planner");
        c.planner.endpoint = get_field(p, "endpoint", c.planner.endpoint, "planner");
        c.planner.model = get_field(p, "model", c.planner.model, "planner");
        c.planner.timeout_s = get_field(p, "timeout_s", c.planner.timeout_s, "planner");
        c.planner.max_retries = get_field(p, "max_retries", c.planner.max_retries, "planner");
        c.planner.temperature = get_field(p, "temperature", c.planner.temperature, "planner");
        c.planner.waypoints = get_field(p, "waypoints", c.planner.waypoints, "planner");
        c.planner.history_len = get_field(p, "history_len", c.planner.history_len, "planner");
    }
    if (user.contains("agents")) {
        const json& a = user.at("agents");
        c.agents.ally = get_field(a, "ally", c.agents.ally, "agents");
        c.agents.opponent = get_field(a, "opponent", c.agents.opponent, "agents");
        c.agents.random_hop_p = get_field(a, "random_hop_p", c.agents.random_hop_p, "agents");
        c.agents.random_spread_p =
            get_field(a, "random_spread_p", c.agents.random_spread_p, "agents");
        c.agents.opponent_jam = get_field(a, "opponent_jam", c.agents.opponent_jam, "agents");
    }
    if (user.contains("maddpg")) {
        const json& m = user.at("maddpg");
        c.maddpg.gamma = get_field(m, "gamma", c.maddpg.gamma, "maddpg");
        c.maddpg.total_steps = get_field(m, "total_steps", c.maddpg.total_steps, "maddpg");
        c.maddpg.batch_size = get_field(m, "batch_size", c.maddpg.batch_size, "maddpg");
        c.maddpg.learning_rate = get_field(m, "learning_rate", c.maddpg.learning_rate, "maddpg");
        c.maddpg.buffer_capacity =
            get_field(m, "buffer_capacity", c.maddpg.buffer_capacity, "maddpg");
        c.maddpg.sigma_start = get_field(m, "sigma_start", c.maddpg.sigma_start, "maddpg");
        c.maddpg.sigma_end = get_field(m, "sigma_end", c.maddpg.sigma_end, "maddpg");
        c.maddpg.tau = get_field(m, "tau", c.maddpg.tau, "maddpg");
        c.maddpg.hidden = get_field(m, "hidden", c.maddpg.hidden, "maddpg");
    }
    c.seed = detail::get_field<uint64_t>(user, "seed", c.seed, "");

    c.validate();
    return c;
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

// Applies one `section.key=value` override onto a raw config json. The value
// is parsed as JSON when possible, otherwise taken as a string.
inline void apply_override(json& j, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must look like section.key=value: " + assignment);
    const std::string dotted = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::exception&) {
        value = raw; // bare strings like --set planner.mode=pattern
    }

    json* node = &j;
    std::stringstream ss(dotted);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    if (parts.empty()) throw ConfigError("empty override key");
    for (size_t i = 0; i + 1 < parts.size(); ++i) node = &(*node)[parts[i]];
    (*node)[parts.back()] = value;
}

// FNV-1a 64 over the canonical serialization; stable across runs and builds.
inline uint64_t config_hash(const json& j) {
    const std::string s = j.dump();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string config_hash_hex(const json& j) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(config_hash(j)));
    return buf;
}

} // namespace fpg
