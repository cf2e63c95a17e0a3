#include "trackblend/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "trackblend/errors.hpp"
#include "trackblend/tracks.hpp"

namespace trackblend {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "expected a number, got '" + std::string(token) + "'");
    }
    return value;
}

long long parse_integer(std::string_view token, std::size_t line) {
    long long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

/// Shortest representation that parses back to the same double.
std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, ptr};
}

struct KeyHandler {
    std::function<void(RunConfig&, std::string_view, std::size_t)> set;
    std::function<std::string(const RunConfig&)> get;
    bool numeric = false;
};

using KeyTable = std::vector<std::pair<std::string, KeyHandler>>;

KeyHandler numeric_key(double RunConfig::*member) {
    KeyHandler h;
    h.numeric = true;
    h.set = [member](RunConfig& c, std::string_view v, std::size_t line) {
        c.*member = parse_double(v, line);
    };
    h.get = [member](const RunConfig& c) { return format_double(c.*member); };
    return h;
}

KeyHandler string_key(std::string RunConfig::*member,
                      std::vector<std::string> allowed = {}) {
    KeyHandler h;
    h.set = [member, allowed](RunConfig& c, std::string_view v, std::size_t line) {
        std::string value{v};
        if (!allowed.empty() &&
            std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
            throw ParseError(line, "invalid value '" + value + "'");
        }
        c.*member = value;
    };
    h.get = [member](const RunConfig& c) { return c.*member; };
    return h;
}

/// Declaration order is the canonical serialization order.
const KeyTable& key_table() {
    static const KeyTable table = [] {
        KeyTable t;
        auto add = [&t](const char* name, KeyHandler h) { t.emplace_back(name, std::move(h)); };

        add("track_file", string_key(&RunConfig::track_file));
        add("dt", numeric_key(&RunConfig::dt));
        add("duration", numeric_key(&RunConfig::duration));
        {
            KeyHandler h;
            h.set = [](RunConfig& c, std::string_view v, std::size_t line) {
                const long long s = parse_integer(v, line);
                if (s < 0) throw ParseError(line, "seed must be non-negative");
                c.seed = static_cast<std::uint64_t>(s);
            };
            h.get = [](const RunConfig& c) { return std::to_string(c.seed); };
            add("seed", std::move(h));
        }
        add("direction", string_key(&RunConfig::direction, {"forward", "reverse"}));
        add("lateral_law",
            string_key(&RunConfig::lateral_law, {"blended", "stanley", "pure_pursuit"}));

        add("lat_blend_factor", numeric_key(&RunConfig::lat_blend_factor));
        add("alpha_schedule",
            string_key(&RunConfig::alpha_schedule, {"constant", "sinusoid"}));
        add("alpha_omega", numeric_key(&RunConfig::alpha_omega));
        add("stanley_gain", numeric_key(&RunConfig::stanley_gain));
        add("stanley_softening", numeric_key(&RunConfig::stanley_softening));
        add("cf_lookahead_d_m", numeric_key(&RunConfig::cf_lookahead_d_m));
        add("cf_lookahead_L_m", numeric_key(&RunConfig::cf_lookahead_L_m));
        add("pp_lookahead_m", numeric_key(&RunConfig::pp_lookahead_m));

        add("acceleration_exp", numeric_key(&RunConfig::acceleration_exp));
        add("deceleration_factor", numeric_key(&RunConfig::deceleration_factor));
        add("max_deceleration", numeric_key(&RunConfig::max_deceleration));
        add("max_obs_deceleration", numeric_key(&RunConfig::max_obs_deceleration));
        add("path_width_m", numeric_key(&RunConfig::path_width_m));
        add("preferred_acceleration", numeric_key(&RunConfig::preferred_acceleration));
        add("preferred_deceleration", numeric_key(&RunConfig::preferred_deceleration));
        add("preferred_speed", numeric_key(&RunConfig::preferred_speed));
        add("preferred_stop_dist", numeric_key(&RunConfig::preferred_stop_dist));
        add("reaction_time", numeric_key(&RunConfig::reaction_time));

        add("wheelbase_m", numeric_key(&RunConfig::wheelbase_m));
        add("max_steer_rad", numeric_key(&RunConfig::max_steer_rad));
        add("steer_rate_rad_s", numeric_key(&RunConfig::steer_rate_rad_s));

        add("initial_offset_m", numeric_key(&RunConfig::initial_offset_m));
        add("initial_heading_error_rad", numeric_key(&RunConfig::initial_heading_error_rad));
        add("initial_speed", numeric_key(&RunConfig::initial_speed));
        add("start_s_m", numeric_key(&RunConfig::start_s_m));
        add("noise_pos_m", numeric_key(&RunConfig::noise_pos_m));
        add("noise_heading_rad", numeric_key(&RunConfig::noise_heading_rad));
        {
            KeyHandler h;
            h.set = [](RunConfig& c, std::string_view v, std::size_t line) {
                const long long s = parse_integer(v, line);
                if (s < 0) throw ParseError(line, "delay_steps must be non-negative");
                c.delay_steps = static_cast<int>(s);
            };
            h.get = [](const RunConfig& c) { return std::to_string(c.delay_steps); };
            add("delay_steps", std::move(h));
        }
        add("max_ray_range_m", numeric_key(&RunConfig::max_ray_range_m));
        return t;
    }();
    return table;
}

const KeyHandler* find_key(const std::string& name) {
    for (const auto& [key, handler] : key_table()) {
        if (key == name) return &handler;
    }
    return nullptr;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
    RunConfig config;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::string> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(line_no, "expected 'key = value'");
        }

        const KeyHandler* handler = find_key(key);
        if (handler == nullptr) {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        seen.push_back(key);
        handler->set(config, value, line_no);
    }
    return config;
}

std::string serialize_run_config(const RunConfig& config) {
    std::ostringstream out;
    for (const auto& [key, handler] : key_table()) {
        const std::string value = handler.get(config);
        if (key == "track_file" && value.empty()) continue;
        out << key << " = " << value << "\n";
    }
    return out.str();
}

RunConfig load_run_config(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw ParseError(0, "cannot open config file: " + file_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

void set_config_value(RunConfig& config, const std::string& key, double value) {
    const KeyHandler* handler = find_key(key);
    if (handler == nullptr || !handler->numeric) throw UnknownKey(key);
    handler->set(config, format_double(value), 0);
}

Path parse_track(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool closed = false;
    bool saw_points = false;
    std::vector<Vec2> pts;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (!saw_points && line.rfind("closed=", 0) == 0) {
            const auto value = trim(line.substr(7));
            if (value == "true") {
                closed = true;
            } else if (value == "false") {
                closed = false;
            } else {
                throw ParseError(line_no, "closed must be true or false");
            }
            continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError(line_no, "expected 'x,y'");
        }
        const double x = parse_double(trim(line.substr(0, comma)), line_no);
        const double y = parse_double(trim(line.substr(comma + 1)), line_no);
        pts.push_back({x, y});
        saw_points = true;
    }

    try {
        return build_path(std::move(pts), closed);
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("invalid track: ") + e.what());
    }
}

Path load_track_file(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw ParseError(0, "cannot open track file: " + file_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_track(buf.str());
}

std::string serialize_track(const Path& path) {
    std::ostringstream out;
    out << "closed=" << (path.closed ? "true" : "false") << "\n";
    for (const auto& p : path.waypoints) {
        out << format_double(p.x) << "," << format_double(p.y) << "\n";
    }
    return out.str();
}

Path resolve_track(const std::string& track_file) {
    if (track_file.empty()) {
        throw ParseError(0, "track_file is required (path, 'benchmark' or 'straight')");
    }
    if (track_file == "benchmark") return benchmark_track();
    if (track_file == "straight") return straight_track(600.0);
    return load_track_file(track_file);
}

SimConfig make_sim_config(const RunConfig& rc, Path track) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ParseError(0, what);
    };
    require(rc.dt > 0.0, "dt must be positive");
    require(rc.duration > 0.0, "duration must be positive");
    require(rc.lat_blend_factor >= 0.0 && rc.lat_blend_factor <= 1.0,
            "lat_blend_factor must be in [0, 1]");
    require(rc.stanley_gain > 0.0, "stanley_gain must be positive");
    require(rc.stanley_softening >= 0.0, "stanley_softening must be non-negative");
    require(rc.cf_lookahead_d_m > 0.0, "cf_lookahead_d_m must be positive");
    require(rc.cf_lookahead_L_m > 0.0, "cf_lookahead_L_m must be positive");
    require(rc.pp_lookahead_m > 0.0, "pp_lookahead_m must be positive");
    require(rc.preferred_speed > 0.0, "preferred_speed must be positive");
    require(rc.preferred_acceleration > 0.0, "preferred_acceleration must be positive");
    require(rc.max_deceleration < 0.0, "max_deceleration must be negative");
    require(rc.max_obs_deceleration < 0.0, "max_obs_deceleration must be negative");
    require(std::abs(rc.max_obs_deceleration) >= std::abs(rc.max_deceleration),
            "max_obs_deceleration must dominate max_deceleration");
    require(rc.reaction_time > 0.0, "reaction_time must be positive");
    require(rc.path_width_m > 0.0, "path_width_m must be positive");
    require(rc.wheelbase_m > 0.0, "wheelbase_m must be positive");
    require(rc.max_steer_rad > 0.0, "max_steer_rad must be positive");
    require(rc.steer_rate_rad_s > 0.0, "steer_rate_rad_s must be positive");
    require(rc.max_ray_range_m > 0.0, "max_ray_range_m must be positive");

    SimConfig cfg;
    cfg.dt = rc.dt;
    cfg.duration = rc.duration;
    cfg.seed = rc.seed;
    cfg.direction = (rc.direction == "reverse") ? Direction::reverse : Direction::forward;
    if (rc.lateral_law == "stanley") {
        cfg.law = LateralLaw::stanley_only;
    } else if (rc.lateral_law == "pure_pursuit") {
        cfg.law = LateralLaw::pure_pursuit_only;
    } else {
        cfg.law = LateralLaw::blended;
    }
    cfg.alpha_schedule = (rc.alpha_schedule == "sinusoid") ? AlphaSchedule::sinusoid
                                                           : AlphaSchedule::constant;
    cfg.alpha_omega = rc.alpha_omega;
    cfg.initial_offset = rc.initial_offset_m;
    cfg.initial_heading_error = rc.initial_heading_error_rad;
    cfg.initial_speed = rc.initial_speed;
    cfg.start_s = rc.start_s_m;
    cfg.noise_position = rc.noise_pos_m;
    cfg.noise_heading = rc.noise_heading_rad;
    cfg.delay_steps = rc.delay_steps;
    cfg.max_ray_range = rc.max_ray_range_m;
    cfg.track = std::move(track);

    cfg.vehicle.wheelbase = rc.wheelbase_m;
    cfg.vehicle.delta_max = rc.max_steer_rad;
    cfg.vehicle.steer_rate_max = rc.steer_rate_rad_s;

    cfg.lateral.alpha = rc.lat_blend_factor;
    cfg.lateral.k = rc.stanley_gain;
    cfg.lateral.v_softening = rc.stanley_softening;
    cfg.lateral.d = rc.cf_lookahead_d_m;
    cfg.lateral.L = rc.cf_lookahead_L_m;
    cfg.lateral.pp_lookahead = rc.pp_lookahead_m;

    cfg.longitudinal.preferred_speed = rc.preferred_speed;
    cfg.longitudinal.preferred_acceleration = rc.preferred_acceleration;
    cfg.longitudinal.preferred_deceleration = rc.preferred_deceleration;
    cfg.longitudinal.idm_exponent = rc.acceleration_exp;
    cfg.longitudinal.preferred_stop_dist = rc.preferred_stop_dist;
    cfg.longitudinal.comfort_decel = rc.max_deceleration;
    cfg.longitudinal.emergency_decel = rc.max_obs_deceleration;
    cfg.longitudinal.reaction_time = rc.reaction_time;
    cfg.longitudinal.path_width = rc.path_width_m;
    cfg.longitudinal.deceleration_factor = rc.deceleration_factor;
    return cfg;
}

}  // namespace trackblend
