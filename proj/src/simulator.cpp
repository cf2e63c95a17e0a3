#include "trackblend/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "trackblend/errors.hpp"

namespace trackblend {

namespace {

/// Seeded uniform noise, bit-stable across platforms: mt19937_64 draws mapped
/// to [0, 1) through the usual 53-bit shift.
class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [-half_width, half_width]; always consumes one draw so
    /// the stream is independent of which noise terms are enabled.
    double uniform(double half_width) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return (2.0 * u - 1.0) * half_width;
    }

private:
    std::mt19937_64 engine_;
};

/// Control-point weight at time t: the schedule for the blended law, the
/// law's own fixed application point for the baselines.
double schedule_alpha(const SimConfig& cfg, double t) {
    switch (cfg.law) {
        case LateralLaw::stanley_only:
            return 1.0;
        case LateralLaw::pure_pursuit_only:
            return 0.0;
        case LateralLaw::blended:
        default:
            if (cfg.alpha_schedule == AlphaSchedule::sinusoid) {
                return 0.5 * (std::sin(cfg.alpha_omega * t) + 1.0);
            }
            return cfg.lateral.alpha;
    }
}

double lateral_command(const SimConfig& cfg, const VehicleState& measured, double alpha) {
    LateralParams lat = cfg.lateral;
    lat.alpha = alpha;
    switch (cfg.law) {
        case LateralLaw::stanley_only:
            lat.alpha = 1.0;
            return compute_steering(measured, cfg.vehicle, cfg.track, lat, cfg.direction);
        case LateralLaw::pure_pursuit_only: {
            if (cfg.direction == Direction::forward) {
                return pure_pursuit(measured.position(), measured.theta, cfg.track,
                                    cfg.vehicle.wheelbase, lat.pp_lookahead);
            }
            const Path reversed = reverse_path(cfg.track);
            return -pure_pursuit(measured.position(), wrap_angle(measured.theta + kPi),
                                 reversed, cfg.vehicle.wheelbase, lat.pp_lookahead);
        }
        case LateralLaw::blended:
        default:
            return compute_steering(measured, cfg.vehicle, cfg.track, lat, cfg.direction);
    }
}

/// Course of the control point vs the local tangent, taken along the motion
/// direction; zero-mean on steady arcs for every control-point choice.
double control_point_heading_error(const SimConfig& cfg, const VehicleState& st, double alpha,
                                   const PathProjection& cp_proj) {
    const bool rev = cfg.direction == Direction::reverse;
    const double theta_dot =
        st.v / cfg.vehicle.wheelbase * std::tan(st.delta);
    const Vec2 body = unit_vector(st.theta);
    const Vec2 cp_vel = body * st.v + body.perp() * (alpha * cfg.vehicle.wheelbase * theta_dot);
    double course;
    if (cp_vel.norm() < 1e-9) {
        course = rev ? wrap_angle(st.theta + kPi) : st.theta;
    } else {
        course = std::atan2(cp_vel.y, cp_vel.x);
    }
    const double motion_tangent =
        rev ? wrap_angle(cp_proj.tangent_heading + kPi) : cp_proj.tangent_heading;
    return wrap_angle(course - motion_tangent);
}

}  // namespace

SimTrace run_scenario(const SimConfig& cfg) {
    if (cfg.dt <= 0.0) throw NonPositiveDt(cfg.dt);
    if (cfg.duration <= 0.0) throw OutOfRange("run_scenario: duration must be positive");
    if (cfg.delay_steps < 0) throw OutOfRange("run_scenario: delay_steps must be >= 0");
    if (cfg.track.waypoints.size() < 2) throw TooFewPoints(cfg.track.waypoints.size());

    const bool rev = cfg.direction == Direction::reverse;
    const double dir_sign = rev ? -1.0 : 1.0;

    const double tangent0 = tangent_at(cfg.track, cfg.start_s);
    const Vec2 p0 = point_at(cfg.track, cfg.start_s) +
                    unit_vector(tangent0).perp() * cfg.initial_offset;
    VehicleState state;
    state.x = p0.x;
    state.y = p0.y;
    state.theta = wrap_angle(tangent0 + cfg.initial_heading_error);
    state.v = dir_sign * cfg.initial_speed;

    NoiseSource noise(cfg.seed);
    std::deque<std::pair<double, double>> delay_line(
        static_cast<std::size_t>(cfg.delay_steps), {0.0, 0.0});
    // borders are fixed for the whole scenario; build them once
    const Corridor corridor{cfg.track, cfg.longitudinal.path_width};
    const Path border_left = offset_border_unchecked(corridor, Side::left);
    const Path border_right = offset_border_unchecked(corridor, Side::right);

    const int n_steps = static_cast<int>(std::llround(cfg.duration / cfg.dt));
    SimTrace trace;
    trace.dt = cfg.dt;
    trace.direction = cfg.direction;
    trace.records.reserve(static_cast<std::size_t>(n_steps) + 1);

    for (int i = 0; i <= n_steps; ++i) {
        const double t = i * cfg.dt;
        try {
            VehicleState measured = state;
            measured.x += noise.uniform(cfg.noise_position);
            measured.y += noise.uniform(cfg.noise_position);
            measured.theta = wrap_angle(measured.theta + noise.uniform(cfg.noise_heading));

            const double alpha = schedule_alpha(cfg, t);
            const double delta_cmd = lateral_command(cfg, measured, alpha);

            const double ray_heading =
                rev ? wrap_angle(measured.theta + kPi) : measured.theta;
            const double d_obs = std::min(
                ray_path_distance(border_left, measured.position(), ray_heading,
                                  cfg.max_ray_range),
                ray_path_distance(border_right, measured.position(), ray_heading,
                                  cfg.max_ray_range));
            const double a_cmd =
                dir_sign * longitudinal_command(std::abs(state.v), d_obs, cfg.longitudinal);

            StepRecord rec;
            rec.t = t;
            rec.x = state.x;
            rec.y = state.y;
            rec.theta = state.theta;
            rec.meas_x = measured.x;
            rec.meas_y = measured.y;
            rec.meas_theta = measured.theta;
            rec.v = state.v;
            rec.delta_cmd = delta_cmd;
            rec.delta_actual = state.delta;
            rec.a_cmd = a_cmd;
            rec.d_obs = d_obs;
            const Vec2 cp = control_point(state, cfg.vehicle, alpha);
            const PathProjection cp_proj = project(cfg.track, cp);
            rec.e_cp = cp_proj.e_d;
            rec.heading_err = control_point_heading_error(cfg, state, alpha, cp_proj);
            rec.alpha = alpha;
            trace.records.push_back(rec);

            if (i == n_steps) break;

            delay_line.emplace_back(delta_cmd, a_cmd);
            const auto [delta_applied, a_applied] = delay_line.front();
            delay_line.pop_front();
            state = step(state, cfg.vehicle, delta_applied, a_applied, cfg.dt);
        } catch (const std::exception& e) {
            throw std::runtime_error("simulation aborted at step " + std::to_string(i) + ": " +
                                     e.what());
        }
    }
    return trace;
}

SummaryMetrics compute_metrics(const SimTrace& trace, bool skip_initialization, double band) {
    if (trace.records.empty()) throw OutOfRange("compute_metrics: empty trace");

    SummaryMetrics m;
    m.band = band;
    const auto& recs = trace.records;
    const std::size_t n = recs.size();

    // first index from which |e_cp| stays inside the band to the end; a hold
    // that only covers the last fifth of the trace does not count as
    // convergence (it would make any trace ending in-band "converged")
    std::size_t conv = n;
    for (std::size_t i = n; i-- > 0;) {
        if (std::abs(recs[i].e_cp) > band) break;
        conv = i;
    }
    m.converged = conv < n && (n - conv) * 5 >= n;
    m.convergence_time = m.converged ? recs[conv].t : recs.back().t;
    if (!m.converged) conv = n;

    std::size_t begin = 0;
    if (skip_initialization) begin = m.converged ? conv : n / 2;

    double sum_abs = 0.0, sum_sq = 0.0, max_abs = 0.0, sum_head = 0.0, sum_dd = 0.0;
    for (std::size_t i = begin; i < n; ++i) {
        const double e = std::abs(recs[i].e_cp);
        sum_abs += e;
        sum_sq += recs[i].e_cp * recs[i].e_cp;
        max_abs = std::max(max_abs, e);
        sum_head += recs[i].heading_err;
        if (i > begin) sum_dd += std::abs(recs[i].delta_cmd - recs[i - 1].delta_cmd);
    }
    const double count = static_cast<double>(n - begin);
    m.mean_abs_lateral_error = sum_abs / count;
    m.rms_lateral_error = std::sqrt(sum_sq / count);
    m.max_abs_lateral_error = max_abs;
    m.mean_heading_error = sum_head / count;
    m.steering_smoothness = (n - begin > 1) ? sum_dd / ((count - 1.0) * trace.dt) : 0.0;

    // initial-transient overshoot: excursion past zero opposite the start side
    const double e0 = recs.front().e_cp;
    if (std::abs(e0) > band) {
        const double sign0 = (e0 > 0.0) ? 1.0 : -1.0;
        for (const auto& r : recs) {
            m.overshoot = std::max(m.overshoot, -sign0 * r.e_cp);
        }
        m.overshoot = std::max(m.overshoot, 0.0);
    }
    return m;
}

std::vector<ComparisonRow> compare_controllers(const SimConfig& base) {
    std::vector<ComparisonRow> rows;
    for (const double alpha : {0.0, 0.5, 1.0}) {
        SimConfig cfg = base;
        cfg.law = LateralLaw::blended;
        cfg.alpha_schedule = AlphaSchedule::constant;
        cfg.lateral.alpha = alpha;
        std::ostringstream name;
        name << "proposed(alpha=" << alpha << ")";
        rows.push_back({name.str(), compute_metrics(run_scenario(cfg), true)});
    }
    {
        SimConfig cfg = base;
        cfg.law = LateralLaw::stanley_only;
        rows.push_back({"stanley", compute_metrics(run_scenario(cfg), true)});
    }
    {
        SimConfig cfg = base;
        cfg.law = LateralLaw::pure_pursuit_only;
        rows.push_back({"pure_pursuit", compute_metrics(run_scenario(cfg), true)});
    }
    return rows;
}

void write_trace_csv(const SimTrace& trace, std::ostream& out) {
    out << "t,x,y,theta,v,delta_cmd,delta_actual,a_cmd,d_obs,e_cp,heading_err_deg,alpha\n";
    char line[512];
    for (const auto& r : trace.records) {
        std::snprintf(line, sizeof(line),
                      "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.t, r.x,
                      r.y, r.theta, r.v, r.delta_cmd, r.delta_actual, r.a_cmd, r.d_obs, r.e_cp,
                      rad_to_deg(r.heading_err), r.alpha);
        out << line;
    }
}

std::string trace_to_csv(const SimTrace& trace) {
    std::ostringstream out;
    write_trace_csv(trace, out);
    return out.str();
}

}  // namespace trackblend
