#pragma once

#include <utility>

#include "trackblend/geometry.hpp"

namespace trackblend {

/// Plant state. (x, y) is the middle of the rear axle; v is signed
/// (negative while reversing); theta is kept in (-pi, pi].
struct VehicleState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double v = 0.0;
    double delta = 0.0;

    Vec2 position() const { return {x, y}; }
};

struct VehicleParams {
    double wheelbase = 2.5;       ///< E (m)
    double delta_max = 0.6;       ///< steering saturation (rad)
    double steer_rate_max = 1.0;  ///< steering slew limit (rad/s)
};

/// One explicit-Euler step of the kinematic bicycle. The steering first slews
/// toward clamp(delta_cmd, +/-delta_max) at steer_rate_max, then
///   x' = v cos(theta), y' = v sin(theta), theta' = v/E tan(delta), v' = accel.
VehicleState step(const VehicleState& state, const VehicleParams& params, double delta_cmd,
                  double accel_cmd, double dt);

/// (rear axle, front axle) positions; front = rear + E * (cos theta, sin theta).
std::pair<Vec2, Vec2> axle_positions(const VehicleState& state, const VehicleParams& params);

/// Point on the wheelbase at fraction alpha from the rear axle (0 = rear, 1 = front).
Vec2 control_point(const VehicleState& state, const VehicleParams& params, double alpha);

}  // namespace trackblend
