#include "trackblend/lateral.hpp"

#include <algorithm>
#include <cmath>

#include "trackblend/errors.hpp"

namespace trackblend {

double stanley(const Vec2& front_axle, double heading, double v, const Path& path,
               const LateralParams& params) {
    const PathProjection proj = project(path, front_axle);
    const double theta_e = wrap_angle(proj.tangent_heading - heading);
    // cross-track error, positive when the path lies to the left of the axle
    const double e = -proj.e_d;
    return theta_e + std::atan(params.k * e / (std::abs(v) + params.v_softening));
}

double curvature_feedback(const Vec2& rear_axle, double heading, const Path& path,
                          double wheelbase, const LateralParams& params) {
    const PathProjection proj = project(path, rear_axle);
    const double e_d = proj.e_d;
    const double e_t = wrap_angle(heading - proj.tangent_heading);
    const double s = (e_d < 0.0) ? -1.0 : 1.0;

    // Convergence term. The two-argument arctangent keeps e_d = 0 exact
    // (atan2(d, 0) = pi/2) and, combined with s, the term is continuous and
    // odd through the path crossing.
    const double phi = std::atan2(params.d, std::abs(e_d));
    const double dist = std::sqrt(e_d * e_d + params.d * params.d);
    const double convergence = -s * std::atan(2.0 * wheelbase * std::cos(s * e_t - phi) / dist);

    // Feed-forward from the heading change at lookahead L. kappa is wrapped to
    // (-pi, pi]; values beyond the asin domain (|kappa| > 2) clamp.
    const double kappa = curvature_change(path, proj.s, heading, params.L);
    const double half_kappa = std::clamp(kappa, -2.0, 2.0) * 0.5;
    const double feedforward = std::atan(2.0 * wheelbase / params.L * std::asin(half_kappa));

    return convergence + feedforward;
}

double blend(double delta_front, double delta_rear, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw AlphaOutOfRange(alpha);
    return alpha * delta_front + (1.0 - alpha) * delta_rear;
}

double pure_pursuit(const Vec2& rear_axle, double heading, const Path& path, double wheelbase,
                    double lookahead) {
    if (lookahead <= 0.0) throw OutOfRange("pure_pursuit: lookahead must be positive");
    const PathProjection proj = project(path, rear_axle);
    double target_s = proj.s + lookahead;
    if (!path.closed) target_s = std::min(target_s, path.total_length());
    const Vec2 to_target = point_at(path, target_s) - rear_axle;
    const double dist = to_target.norm();
    if (dist < 1e-9) return 0.0;
    const double eta = wrap_angle(std::atan2(to_target.y, to_target.x) - heading);
    return std::atan(2.0 * wheelbase * std::sin(eta) / dist);
}

double compute_steering(const VehicleState& state, const VehicleParams& vehicle,
                        const Path& path, const LateralParams& params, Direction direction) {
    if (direction == Direction::forward) {
        const auto [rear, front] = axle_positions(state, vehicle);
        const double delta_front = stanley(front, state.theta, state.v, path, params);
        const double delta_rear =
            curvature_feedback(rear, state.theta, path, vehicle.wheelbase, params);
        return blend(delta_front, delta_rear, params.alpha);
    }

    // Reverse: the laws see the mirror vehicle (heading flipped by pi) on the
    // direction-reversed path and the command maps back through a sign flip.
    // Both laws take their errors at the physical rear axle: it is the leading
    // axle while backing and the only one that moves along the body axis, so
    // it plays the virtual front for the Stanley term (axle roles swap with
    // the motion) and stays the reference of the curvature law.
    const Path reversed = reverse_path(path);
    const double virtual_heading = wrap_angle(state.theta + kPi);
    const Vec2 rear = state.position();
    const double delta_front = stanley(rear, virtual_heading, state.v, reversed, params);
    const double delta_rear =
        curvature_feedback(rear, virtual_heading, reversed, vehicle.wheelbase, params);
    return -blend(delta_front, delta_rear, params.alpha);
}

}  // namespace trackblend
