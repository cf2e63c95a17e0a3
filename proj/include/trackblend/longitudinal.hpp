#pragma once

namespace trackblend {

/// Speed-regulation constants. Decelerations are negative.
struct LongitudinalParams {
    double preferred_speed = 3.0;         ///< v0 (m/s)
    double preferred_acceleration = 1.0;  ///< a (m/s^2)
    double preferred_deceleration = -1.0; ///< b (m/s^2), reserved for leader-following
    double idm_exponent = 3.0;            ///< delta_idm
    double preferred_stop_dist = 0.0;     ///< s0 (m)
    double comfort_decel = -4.0;          ///< b_f (m/s^2)
    double emergency_decel = -8.0;        ///< b_l (m/s^2), |b_l| >= |b_f|
    double reaction_time = 1.0;           ///< tau (s)
    double path_width = 12.0;             ///< corridor half-width w (m)
    double deceleration_factor = 2.0;     ///< multiplier on negative stop-law output
};

/// Interaction-free IDM term: a * (1 - (v / v0)^exponent).
double idm_free_flow(double v, const LongitudinalParams& p);

/// Reaction-time stop law: the largest acceleration that can be held for tau
/// seconds and still allow an emergency stop within s_obs. Both quadratic
/// roots are evaluated and checked against the stopping-distance contract
/// (tau at the candidate, then braking at b_l must come to rest within
/// s_obs); an infeasible radicand falls back to the emergency floor b_l.
/// Negative results are scaled by deceleration_factor.
double reaction_stop_accel(double s_obs, double v, const LongitudinalParams& p);

/// Fused command: min(reaction stop law, free-flow IDM), clamped to
/// [b_l, preferred_acceleration]. d_obs is reduced by the preferred stop
/// distance (floored at 1 cm).
double longitudinal_command(double v, double d_obs, const LongitudinalParams& p);

}  // namespace trackblend
