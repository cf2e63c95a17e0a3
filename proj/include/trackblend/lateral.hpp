#pragma once

#include "trackblend/path.hpp"
#include "trackblend/vehicle.hpp"

namespace trackblend {

struct LateralParams {
    double alpha = 0.5;        ///< blend weight, 1 = front axle, 0 = rear axle
    double k = 2.5;            ///< Stanley cross-track gain
    double v_softening = 0.1;  ///< added to |v| in the Stanley denominator (m/s)
    double d = 1.5;            ///< convergence-term lookahead distance (m)
    double L = 4.0;            ///< feed-forward lookahead distance (m)
    double pp_lookahead = 5.0; ///< pure-pursuit baseline lookahead (m)
};

enum class Direction { forward, reverse };

/// Front-axle law: delta = theta_e + atan(k * e / (|v| + softening)), where
/// theta_e is the tangent-minus-heading error and e is the cross-track error
/// of the front axle, positive when the path lies to the left of the axle.
double stanley(const Vec2& front_axle, double heading, double v, const Path& path,
               const LateralParams& params);

/// Rear-axle law: a convergence term built from the signed distance e_d, the
/// heading error e_t and the lookahead d, plus a feed-forward term from the
/// heading change kappa at lookahead L:
///   delta = -s * atan(2E cos(s*e_t - atan2(d, |e_d|)) / sqrt(e_d^2 + d^2))
///           + atan((2E / L) * asin(kappa / 2))
/// with s = sign(e_d) (+1 at zero). kappa is clamped to [-2, 2] so the asin
/// stays defined on hairpin geometry.
double curvature_feedback(const Vec2& rear_axle, double heading, const Path& path,
                          double wheelbase, const LateralParams& params);

/// Convex combination alpha * delta_front + (1 - alpha) * delta_rear.
double blend(double delta_front, double delta_rear, double alpha);

/// Geometric baseline: delta = atan(2E sin(eta) / dist) toward the path point
/// `lookahead` meters ahead of the rear-axle projection.
double pure_pursuit(const Vec2& rear_axle, double heading, const Path& path, double wheelbase,
                    double lookahead);

/// Full blended command. Forward: blend(stanley @ front, curvature_feedback @
/// rear, alpha). In reverse both laws are evaluated at their own axles against
/// the direction-reversed path with the heading flipped by pi, and the result
/// is negated per the symmetry of the bicycle model.
double compute_steering(const VehicleState& state, const VehicleParams& vehicle,
                        const Path& path, const LateralParams& params, Direction direction);

}  // namespace trackblend
