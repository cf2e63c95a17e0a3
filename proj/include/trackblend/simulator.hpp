#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trackblend/lateral.hpp"
#include "trackblend/longitudinal.hpp"
#include "trackblend/path.hpp"
#include "trackblend/vehicle.hpp"

namespace trackblend {

enum class AlphaSchedule { constant, sinusoid };
enum class LateralLaw { blended, stanley_only, pure_pursuit_only };

struct SimConfig {
    double dt = 0.01;
    double duration = 60.0;
    double initial_offset = 4.0;         ///< signed lateral start offset (m, left positive)
    double initial_heading_error = 0.0;  ///< rad
    double initial_speed = 0.0;          ///< magnitude, sign follows direction
    double start_s = 0.0;
    Direction direction = Direction::forward;
    LateralLaw law = LateralLaw::blended;
    AlphaSchedule alpha_schedule = AlphaSchedule::constant;
    double alpha_omega = 0.2;     ///< rad/s for the sinusoid schedule
    double noise_position = 0.0;  ///< uniform half-width on measured x and y (m)
    double noise_heading = 0.0;   ///< uniform half-width on measured heading (rad)
    int delay_steps = 0;          ///< actuation delay in steps
    std::uint64_t seed = 1;
    double max_ray_range = 200.0;

    Path track;
    VehicleParams vehicle;
    LateralParams lateral;
    LongitudinalParams longitudinal;
};

struct StepRecord {
    double t = 0.0;
    double x = 0.0, y = 0.0, theta = 0.0;  ///< true pose
    double meas_x = 0.0, meas_y = 0.0, meas_theta = 0.0;
    double v = 0.0;
    double delta_cmd = 0.0;     ///< command computed this step (pre delay line)
    double delta_actual = 0.0;  ///< actuator position
    double a_cmd = 0.0;
    double d_obs = 0.0;
    double e_cp = 0.0;         ///< signed lateral error of the control point (m)
    double heading_err = 0.0;  ///< control-point course vs local tangent (rad)
    double alpha = 0.0;
};

struct SimTrace {
    std::vector<StepRecord> records;
    double dt = 0.0;
    Direction direction = Direction::forward;
};

/// Aggregate accuracy/stability statistics over the metrics window.
struct SummaryMetrics {
    double mean_abs_lateral_error = 0.0;
    double rms_lateral_error = 0.0;
    double max_abs_lateral_error = 0.0;
    double mean_heading_error = 0.0;    ///< signed mean (rad)
    double steering_smoothness = 0.0;   ///< mean |delta_cmd step change| / dt (rad/s)
    double convergence_time = 0.0;      ///< first sustained entry into the band (s)
    double overshoot = 0.0;             ///< max excursion past zero opposite the start side (m)
    bool converged = false;             ///< band entered and held to the end
    double band = 0.15;                 ///< band half-width used (m)
};

/// Deterministic closed-loop run: measure (truth + seeded uniform noise),
/// compute steering and speed commands from the measured state, push them
/// through the actuation delay line, and integrate the true plant.
/// Identical configs and seeds produce identical traces.
SimTrace run_scenario(const SimConfig& config);

/// Metrics over the post-initialization window (from the first sustained entry
/// into the +/-band) when skip_initialization is set, else the full trace.
/// When the band is never held, `converged` is false and the metrics cover the
/// tail half of the trace.
SummaryMetrics compute_metrics(const SimTrace& trace, bool skip_initialization,
                               double band = 0.15);

struct ComparisonRow {
    std::string name;
    SummaryMetrics metrics;
};

/// Runs the blended law at alpha in {0, 0.5, 1}, Stanley-only and the
/// pure-pursuit baseline on the same track, dt and seed.
std::vector<ComparisonRow> compare_controllers(const SimConfig& base);

/// CSV with the fixed header
/// t,x,y,theta,v,delta_cmd,delta_actual,a_cmd,d_obs,e_cp,heading_err_deg,alpha
/// and 9 significant digits per float.
void write_trace_csv(const SimTrace& trace, std::ostream& out);
std::string trace_to_csv(const SimTrace& trace);

}  // namespace trackblend
