"""Smoke tests for the trackblend python module.

Runs standalone (python test_smoke.py) or under pytest.
"""

import math

import trackblend as tb


def test_path_building_and_projection():
    path = tb.build_path([(0.0, 0.0), (10.0, 0.0)])
    assert math.isclose(path.total_length(), 10.0)

    proj = tb.project(path, tb.Vec2(5.0, 4.0))
    assert math.isclose(proj.e_d, 4.0, abs_tol=1e-12)
    assert math.isclose(proj.s, 5.0, abs_tol=1e-12)
    assert math.isclose(proj.tangent_heading, 0.0, abs_tol=1e-12)

    square = tb.build_path([(0, 0), (1, 0), (1, 1), (0, 1)], closed=True)
    assert math.isclose(square.total_length(), 4.0)
    center = tb.project(square, tb.Vec2(0.5, 0.5))
    assert math.isclose(abs(center.e_d), 0.5, abs_tol=1e-12)


def test_input_validation_raises():
    try:
        tb.build_path([(0.0, 0.0)])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a one-point path")

    state = tb.VehicleState()
    try:
        tb.control_point(state, tb.VehicleParams(), 1.5)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for alpha outside [0, 1]")


def test_vehicle_step_and_laws():
    params = tb.VehicleParams()
    state = tb.VehicleState(v=1.0)
    nxt = tb.step(state, params, 0.0, 0.0, 0.1)
    assert math.isclose(nxt.x, 0.1, abs_tol=1e-12)

    path = tb.straight_track(200.0)
    lat = tb.LateralParams()
    rear, front = tb.axle_positions(state, params)
    assert abs(tb.stanley(front, 0.0, 1.0, path, lat)) < 1e-12
    assert abs(tb.curvature_feedback(rear, 0.0, path, params.wheelbase, lat)) < 1e-12
    assert math.isclose(tb.blend(0.2, 0.4, 0.5), 0.3, abs_tol=1e-15)

    lon = tb.LongitudinalParams()
    assert math.isclose(tb.idm_free_flow(1.5, lon), 0.875, abs_tol=1e-12)
    assert tb.longitudinal_command(3.0, 2.0, lon) < 0.0


def test_ray_casting():
    corridor = tb.Corridor(tb.straight_track(100.0), 12.0)
    d = tb.ray_border_distance(corridor, tb.Vec2(50.0, 0.0), math.pi / 2.0, 200.0)
    assert math.isclose(d, 12.0, abs_tol=1e-9)
    free = tb.ray_border_distance(corridor, tb.Vec2(50.0, 0.0), 0.0, 200.0)
    assert math.isclose(free, 200.0)


def test_scenario_run_is_deterministic():
    cfg = tb.SimConfig()
    cfg.track = tb.straight_track(600.0)
    cfg.duration = 10.0
    cfg.initial_offset = 2.0
    cfg.noise_position = 0.05
    cfg.noise_heading = 0.01
    cfg.seed = 7

    trace_a = tb.run_scenario(cfg)
    trace_b = tb.run_scenario(cfg)
    assert len(trace_a) == 1001
    assert trace_a.to_csv() == trace_b.to_csv()

    metrics = tb.compute_metrics(trace_a, skip_initialization=True)
    assert metrics.converged
    assert metrics.mean_abs_lateral_error < 0.1


def test_benchmark_track_and_config():
    track = tb.benchmark_track()
    assert track.closed
    assert abs(track.total_length() - 603.5) < 1.0

    rc = tb.parse_run_config("track_file = straight\npreferred_speed = 2.0\n")
    cfg = tb.make_sim_config(rc, tb.resolve_track("straight"))
    assert math.isclose(cfg.longitudinal.preferred_speed, 2.0)

    round_trip = tb.parse_run_config(tb.serialize_run_config(rc))
    assert tb.serialize_run_config(round_trip) == tb.serialize_run_config(rc)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
