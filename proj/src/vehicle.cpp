#include "trackblend/vehicle.hpp"

#include <algorithm>
#include <cmath>

#include "trackblend/errors.hpp"

namespace trackblend {

VehicleState step(const VehicleState& state, const VehicleParams& params, double delta_cmd,
                  double accel_cmd, double dt) {
    if (dt <= 0.0) throw NonPositiveDt(dt);

    VehicleState next = state;

    const double target = std::clamp(delta_cmd, -params.delta_max, params.delta_max);
    const double max_step = params.steer_rate_max * dt;
    next.delta = state.delta + std::clamp(target - state.delta, -max_step, max_step);

    next.x = state.x + state.v * std::cos(state.theta) * dt;
    next.y = state.y + state.v * std::sin(state.theta) * dt;
    next.theta = wrap_angle(state.theta +
                            state.v / params.wheelbase * std::tan(next.delta) * dt);
    next.v = state.v + accel_cmd * dt;
    return next;
}

std::pair<Vec2, Vec2> axle_positions(const VehicleState& state, const VehicleParams& params) {
    const Vec2 rear = state.position();
    const Vec2 front = rear + unit_vector(state.theta) * params.wheelbase;
    return {rear, front};
}

Vec2 control_point(const VehicleState& state, const VehicleParams& params, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw AlphaOutOfRange(alpha);
    return state.position() + unit_vector(state.theta) * (alpha * params.wheelbase);
}

}  // namespace trackblend
