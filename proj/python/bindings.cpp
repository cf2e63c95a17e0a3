#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trackblend/config.hpp"
#include "trackblend/errors.hpp"
#include "trackblend/lateral.hpp"
#include "trackblend/longitudinal.hpp"
#include "trackblend/path.hpp"
#include "trackblend/simulator.hpp"
#include "trackblend/tracks.hpp"
#include "trackblend/vehicle.hpp"

namespace py = pybind11;
using namespace trackblend;

namespace {

Path build_path_from_tuples(const std::vector<std::pair<double, double>>& pts, bool closed) {
    std::vector<Vec2> waypoints;
    waypoints.reserve(pts.size());
    for (const auto& [x, y] : pts) waypoints.push_back({x, y});
    return build_path(std::move(waypoints), closed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Path-tracking control toolkit: blended lateral steering laws, "
              "virtual-border longitudinal control and a closed-loop simulator.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<TooFewPoints>(m, "TooFewPointsError", PyExc_ValueError);
    py::register_exception<DegenerateSegment>(m, "DegenerateSegmentError", PyExc_ValueError);
    py::register_exception<OutOfRange>(m, "OutOfRangeError", PyExc_ValueError);
    py::register_exception<SelfIntersectingOffset>(m, "SelfIntersectingOffsetError",
                                                   PyExc_ValueError);
    py::register_exception<AlphaOutOfRange>(m, "AlphaOutOfRangeError", PyExc_ValueError);
    py::register_exception<NonPositiveDt>(m, "NonPositiveDtError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ConfigParseError", PyExc_ValueError);
    py::register_exception<UnknownKey>(m, "UnknownKeyError", PyExc_KeyError);

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("norm", &Vec2::norm)
        .def("__repr__", [](const Vec2& v) {
            std::ostringstream out;
            out << "Vec2(" << v.x << ", " << v.y << ")";
            return out.str();
        });

    py::class_<Path>(m, "Path")
        .def_readonly("waypoints", &Path::waypoints)
        .def_readonly("cumulative_s", &Path::cumulative_s)
        .def_readonly("closed", &Path::closed)
        .def("total_length", &Path::total_length)
        .def("__len__", [](const Path& p) { return p.waypoints.size(); });

    py::class_<PathProjection>(m, "PathProjection")
        .def_readonly("s", &PathProjection::s)
        .def_readonly("e_d", &PathProjection::e_d)
        .def_readonly("tangent_heading", &PathProjection::tangent_heading)
        .def_readonly("segment_index", &PathProjection::segment_index);

    py::class_<Corridor>(m, "Corridor")
        .def(py::init<Path, double>(), py::arg("center"), py::arg("width"))
        .def_readonly("center", &Corridor::center)
        .def_readonly("width", &Corridor::width);

    py::enum_<Side>(m, "Side").value("left", Side::left).value("right", Side::right);
    py::enum_<Direction>(m, "Direction")
        .value("forward", Direction::forward)
        .value("reverse", Direction::reverse);
    py::enum_<AlphaSchedule>(m, "AlphaSchedule")
        .value("constant", AlphaSchedule::constant)
        .value("sinusoid", AlphaSchedule::sinusoid);
    py::enum_<LateralLaw>(m, "LateralLaw")
        .value("blended", LateralLaw::blended)
        .value("stanley_only", LateralLaw::stanley_only)
        .value("pure_pursuit_only", LateralLaw::pure_pursuit_only);

    m.def("build_path", &build_path_from_tuples, py::arg("waypoints"),
          py::arg("closed") = false);
    m.def("reverse_path", &reverse_path);
    m.def("point_at", &point_at, py::arg("path"), py::arg("s"));
    m.def("tangent_at", &tangent_at, py::arg("path"), py::arg("s"));
    m.def("project", &project, py::arg("path"), py::arg("point"));
    m.def("curvature_change", &curvature_change, py::arg("path"), py::arg("from_s"),
          py::arg("vehicle_heading"), py::arg("lookahead"));
    m.def("offset_border", &offset_border, py::arg("corridor"), py::arg("side"));
    m.def("offset_border_unchecked", &offset_border_unchecked, py::arg("corridor"),
          py::arg("side"));
    m.def("ray_path_distance", &ray_path_distance, py::arg("polyline"), py::arg("origin"),
          py::arg("heading"), py::arg("max_range") = 200.0);
    m.def("ray_border_distance", &ray_border_distance, py::arg("corridor"), py::arg("origin"),
          py::arg("heading"), py::arg("max_range") = 200.0);

    py::class_<VehicleState>(m, "VehicleState")
        .def(py::init<>())
        .def(py::init([](double x, double y, double theta, double v, double delta) {
                 return VehicleState{x, y, theta, v, delta};
             }),
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("theta") = 0.0,
             py::arg("v") = 0.0, py::arg("delta") = 0.0)
        .def_readwrite("x", &VehicleState::x)
        .def_readwrite("y", &VehicleState::y)
        .def_readwrite("theta", &VehicleState::theta)
        .def_readwrite("v", &VehicleState::v)
        .def_readwrite("delta", &VehicleState::delta);

    py::class_<VehicleParams>(m, "VehicleParams")
        .def(py::init<>())
        .def_readwrite("wheelbase", &VehicleParams::wheelbase)
        .def_readwrite("delta_max", &VehicleParams::delta_max)
        .def_readwrite("steer_rate_max", &VehicleParams::steer_rate_max);

    m.def("step", &step, py::arg("state"), py::arg("params"), py::arg("delta_cmd"),
          py::arg("accel_cmd"), py::arg("dt"));
    m.def("axle_positions", &axle_positions, py::arg("state"), py::arg("params"));
    m.def("control_point", &control_point, py::arg("state"), py::arg("params"),
          py::arg("alpha"));

    py::class_<LateralParams>(m, "LateralParams")
        .def(py::init<>())
        .def_readwrite("alpha", &LateralParams::alpha)
        .def_readwrite("k", &LateralParams::k)
        .def_readwrite("v_softening", &LateralParams::v_softening)
        .def_readwrite("d", &LateralParams::d)
        .def_readwrite("L", &LateralParams::L)
        .def_readwrite("pp_lookahead", &LateralParams::pp_lookahead);

    m.def("stanley", &stanley, py::arg("front_axle"), py::arg("heading"), py::arg("v"),
          py::arg("path"), py::arg("params"));
    m.def("curvature_feedback", &curvature_feedback, py::arg("rear_axle"), py::arg("heading"),
          py::arg("path"), py::arg("wheelbase"), py::arg("params"));
    m.def("blend", &blend, py::arg("delta_front"), py::arg("delta_rear"), py::arg("alpha"));
    m.def("pure_pursuit", &pure_pursuit, py::arg("rear_axle"), py::arg("heading"),
          py::arg("path"), py::arg("wheelbase"), py::arg("lookahead"));
    m.def("compute_steering", &compute_steering, py::arg("state"), py::arg("vehicle"),
          py::arg("path"), py::arg("params"), py::arg("direction") = Direction::forward);

    py::class_<LongitudinalParams>(m, "LongitudinalParams")
        .def(py::init<>())
        .def_readwrite("preferred_speed", &LongitudinalParams::preferred_speed)
        .def_readwrite("preferred_acceleration", &LongitudinalParams::preferred_acceleration)
        .def_readwrite("preferred_deceleration", &LongitudinalParams::preferred_deceleration)
        .def_readwrite("idm_exponent", &LongitudinalParams::idm_exponent)
        .def_readwrite("preferred_stop_dist", &LongitudinalParams::preferred_stop_dist)
        .def_readwrite("comfort_decel", &LongitudinalParams::comfort_decel)
        .def_readwrite("emergency_decel", &LongitudinalParams::emergency_decel)
        .def_readwrite("reaction_time", &LongitudinalParams::reaction_time)
        .def_readwrite("path_width", &LongitudinalParams::path_width)
        .def_readwrite("deceleration_factor", &LongitudinalParams::deceleration_factor);

    m.def("idm_free_flow", &idm_free_flow, py::arg("v"), py::arg("params"));
    m.def("reaction_stop_accel", &reaction_stop_accel, py::arg("s_obs"), py::arg("v"),
          py::arg("params"));
    m.def("longitudinal_command", &longitudinal_command, py::arg("v"), py::arg("d_obs"),
          py::arg("params"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("duration", &SimConfig::duration)
        .def_readwrite("initial_offset", &SimConfig::initial_offset)
        .def_readwrite("initial_heading_error", &SimConfig::initial_heading_error)
        .def_readwrite("initial_speed", &SimConfig::initial_speed)
        .def_readwrite("start_s", &SimConfig::start_s)
        .def_readwrite("direction", &SimConfig::direction)
        .def_readwrite("law", &SimConfig::law)
        .def_readwrite("alpha_schedule", &SimConfig::alpha_schedule)
        .def_readwrite("alpha_omega", &SimConfig::alpha_omega)
        .def_readwrite("noise_position", &SimConfig::noise_position)
        .def_readwrite("noise_heading", &SimConfig::noise_heading)
        .def_readwrite("delay_steps", &SimConfig::delay_steps)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("max_ray_range", &SimConfig::max_ray_range)
        .def_readwrite("track", &SimConfig::track)
        .def_readwrite("vehicle", &SimConfig::vehicle)
        .def_readwrite("lateral", &SimConfig::lateral)
        .def_readwrite("longitudinal", &SimConfig::longitudinal);

    py::class_<StepRecord>(m, "StepRecord")
        .def_readonly("t", &StepRecord::t)
        .def_readonly("x", &StepRecord::x)
        .def_readonly("y", &StepRecord::y)
        .def_readonly("theta", &StepRecord::theta)
        .def_readonly("meas_x", &StepRecord::meas_x)
        .def_readonly("meas_y", &StepRecord::meas_y)
        .def_readonly("meas_theta", &StepRecord::meas_theta)
        .def_readonly("v", &StepRecord::v)
        .def_readonly("delta_cmd", &StepRecord::delta_cmd)
        .def_readonly("delta_actual", &StepRecord::delta_actual)
        .def_readonly("a_cmd", &StepRecord::a_cmd)
        .def_readonly("d_obs", &StepRecord::d_obs)
        .def_readonly("e_cp", &StepRecord::e_cp)
        .def_readonly("heading_err", &StepRecord::heading_err)
        .def_readonly("alpha", &StepRecord::alpha);

    py::class_<SimTrace>(m, "SimTrace")
        .def_readonly("records", &SimTrace::records)
        .def_readonly("dt", &SimTrace::dt)
        .def("to_csv", &trace_to_csv)
        .def("__len__", [](const SimTrace& t) { return t.records.size(); });

    py::class_<SummaryMetrics>(m, "SummaryMetrics")
        .def_readonly("mean_abs_lateral_error", &SummaryMetrics::mean_abs_lateral_error)
        .def_readonly("rms_lateral_error", &SummaryMetrics::rms_lateral_error)
        .def_readonly("max_abs_lateral_error", &SummaryMetrics::max_abs_lateral_error)
        .def_readonly("mean_heading_error", &SummaryMetrics::mean_heading_error)
        .def_readonly("steering_smoothness", &SummaryMetrics::steering_smoothness)
        .def_readonly("convergence_time", &SummaryMetrics::convergence_time)
        .def_readonly("overshoot", &SummaryMetrics::overshoot)
        .def_readonly("converged", &SummaryMetrics::converged)
        .def_readonly("band", &SummaryMetrics::band);

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("name", &ComparisonRow::name)
        .def_readonly("metrics", &ComparisonRow::metrics);

    m.def("run_scenario", &run_scenario, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("compute_metrics", &compute_metrics, py::arg("trace"),
          py::arg("skip_initialization") = true, py::arg("band") = 0.15);
    m.def("compare_controllers", &compare_controllers, py::arg("base"),
          py::call_guard<py::gil_scoped_release>());

    m.def("benchmark_track", &benchmark_track);
    m.def("straight_track", &straight_track, py::arg("length"), py::arg("spacing") = 2.0);
    m.def("circle_track", &circle_track, py::arg("radius"), py::arg("max_spacing") = 1.0);

    py::class_<RunConfig>(m, "RunConfig").def(py::init<>());
    m.def("parse_run_config", &parse_run_config);
    m.def("serialize_run_config", &serialize_run_config);
    m.def("load_run_config", &load_run_config);
    m.def("set_config_value", &set_config_value);
    m.def("parse_track", &parse_track);
    m.def("serialize_track", &serialize_track);
    m.def("load_track_file", &load_track_file);
    m.def("resolve_track", &resolve_track);
    m.def("make_sim_config", &make_sim_config, py::arg("config"), py::arg("track"));
    m.def("wrap_angle", &wrap_angle);
}
