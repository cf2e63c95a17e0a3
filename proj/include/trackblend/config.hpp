#pragma once

#include <cstdint>
#include <string>

#include "trackblend/simulator.hpp"

namespace trackblend {

/// Flat key = value run configuration. Longitudinal keys use the verbatim
/// benchmark parameter names (lat_blend_factor, acceleration_exp, ...); the
/// remaining keys are artifact settings. Every key has a default except
/// track_file.
struct RunConfig {
    // lateral / blending
    double lat_blend_factor = 0.5;
    double stanley_gain = 2.5;
    double stanley_softening = 0.1;
    double cf_lookahead_d_m = 1.5;
    double cf_lookahead_L_m = 4.0;
    double pp_lookahead_m = 5.0;

    // longitudinal
    double acceleration_exp = 3.0;
    double deceleration_factor = 2.0;
    double max_deceleration = -4.0;      // b_f
    double max_obs_deceleration = -8.0;  // b_l
    double path_width_m = 12.0;
    double preferred_acceleration = 1.0;
    double preferred_deceleration = -1.0;
    double preferred_speed = 3.0;
    double preferred_stop_dist = 0.0;
    double reaction_time = 1.0;

    // vehicle
    double wheelbase_m = 2.5;
    double max_steer_rad = 0.6;
    double steer_rate_rad_s = 1.0;

    // scenario
    double dt = 0.01;
    double duration = 60.0;
    std::uint64_t seed = 1;
    std::string track_file;  // no default; "benchmark" and "straight" are built in
    std::string direction = "forward";
    std::string lateral_law = "blended";
    std::string alpha_schedule = "constant";
    double alpha_omega = 0.2;
    double initial_offset_m = 4.0;
    double initial_heading_error_rad = 0.0;
    double initial_speed = 0.0;
    double start_s_m = 0.0;
    double noise_pos_m = 0.0;
    double noise_heading_rad = 0.0;
    int delay_steps = 0;
    double max_ray_range_m = 200.0;

    bool operator==(const RunConfig&) const = default;
};

/// Parses `key = value` lines ('#' comments). Unknown or duplicate keys and
/// malformed values throw ParseError with the line number.
RunConfig parse_run_config(const std::string& text);

/// Canonical serialization; parse(serialize(c)) == c.
std::string serialize_run_config(const RunConfig& config);

RunConfig load_run_config(const std::string& file_path);

/// Sets a numeric field by config key name; throws UnknownKey for anything
/// that is not a numeric config field.
void set_config_value(RunConfig& config, const std::string& key, double value);

/// Reads a track file: one `x,y` line per waypoint, optional leading
/// `closed=true|false` header, '#' comments. Locale-independent.
Path parse_track(const std::string& text);
Path load_track_file(const std::string& file_path);
std::string serialize_track(const Path& path);

/// Resolves track_file ("benchmark" and "straight" are generated, anything
/// else is read from disk; empty throws ParseError).
Path resolve_track(const std::string& track_file);

/// Builds the simulator configuration, validating ranges.
SimConfig make_sim_config(const RunConfig& config, Path track);

}  // namespace trackblend
