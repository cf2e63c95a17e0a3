#include "trackblend/longitudinal.hpp"

#include <algorithm>
#include <cmath>

namespace trackblend {

namespace {

/// Closed-form distance covered when holding accel for tau seconds from speed
/// v (clamped at rest) and then braking at b_l until standstill.
double stopping_distance(double accel, double v, double tau, double b_l) {
    double dist = 0.0;
    double v_end = v + accel * tau;
    if (accel < 0.0 && v_end < 0.0) {
        // comes to rest during the reaction window
        return v * v / (-2.0 * accel);
    }
    dist += v * tau + 0.5 * accel * tau * tau;
    dist += v_end * v_end / (-2.0 * b_l);
    return dist;
}

}  // namespace

double idm_free_flow(double v, const LongitudinalParams& p) {
    return p.preferred_acceleration *
           (1.0 - std::pow(v / p.preferred_speed, p.idm_exponent));
}

double reaction_stop_accel(double s_obs, double v, const LongitudinalParams& p) {
    const double bf = p.comfort_decel;
    const double bl = p.emergency_decel;
    const double tau = p.reaction_time;

    const double radicand =
        (bf * bl * tau * tau + 4.0 * bl * v * tau - 8.0 * bl * s_obs) / (4.0 * bf * bl);

    if (radicand < 0.0) return bl;  // geometry infeasible, emergency floor

    const double sq = 2.0 * std::abs(bf) * std::sqrt(radicand);
    const double base = bf * tau - 2.0 * v;
    const double hi = (base + sq) / (2.0 * tau);
    const double lo = (base - sq) / (2.0 * tau);
    // The +/- is settled by the stopping contract: the admissible root is the
    // largest one whose tau-delayed emergency braking still stops within s_obs.
    double a_r;
    if (stopping_distance(hi, v, tau, bl) <= s_obs) {
        a_r = hi;
    } else if (stopping_distance(lo, v, tau, bl) <= s_obs) {
        a_r = lo;
    } else {
        return bl;
    }

    if (a_r < 0.0) a_r *= p.deceleration_factor;
    return a_r;
}

double longitudinal_command(double v, double d_obs, const LongitudinalParams& p) {
    const double s_eff = d_obs - p.preferred_stop_dist;
    // Contact floor: inside 1 cm the stop law would otherwise allow an
    // asymptotic creep through the obstacle point.
    if (s_eff <= 0.01) return p.emergency_decel;
    const double a_stop = reaction_stop_accel(s_eff, v, p);
    const double a_idm = idm_free_flow(v, p);
    return std::clamp(std::min(a_stop, a_idm), p.emergency_decel, p.preferred_acceleration);
}

}  // namespace trackblend
