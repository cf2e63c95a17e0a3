#pragma once

#include <cmath>

namespace trackblend {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Planar point / vector in meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }

    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
    /// 90 degree counter-clockwise rotation (left normal of a direction).
    constexpr Vec2 perp() const { return {-y, x}; }
};

inline constexpr Vec2 operator*(double k, const Vec2& v) { return v * k; }

/// Unit vector for a heading angle.
inline Vec2 unit_vector(double heading) { return {std::cos(heading), std::sin(heading)}; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::fmod(a + kPi, 2.0 * kPi);
    if (r <= 0.0) r += 2.0 * kPi;
    return r - kPi;
}

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace trackblend
