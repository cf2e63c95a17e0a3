#include "trackblend/tracks.hpp"

#include <cmath>

namespace trackblend {

namespace {

struct Cursor {
    Vec2 pos{0.0, 0.0};
    double heading = 0.0;
    std::vector<Vec2> pts;

    void emit(const Vec2& p) {
        if (pts.empty() || (p - pts.back()).norm() > 1e-9) pts.push_back(p);
    }

    void straight(double length, double spacing) {
        const Vec2 u = unit_vector(heading);
        const int n = std::max(1, static_cast<int>(std::ceil(length / spacing)));
        for (int i = 0; i <= n; ++i) emit(pos + u * (length * i / n));
        pos = pos + u * length;
    }

    /// Left arc of the given radius sweeping `angle` radians.
    void arc_left(double radius, double angle, double max_spacing) {
        const Vec2 center = pos + unit_vector(heading).perp() * radius;
        const double start = heading - kPi / 2.0;
        const double max_step = std::min(deg_to_rad(3.0), max_spacing / radius);
        const int n = std::max(1, static_cast<int>(std::ceil(angle / max_step)));
        for (int i = 0; i <= n; ++i) {
            const double a = start + angle * i / n;
            emit(center + unit_vector(a) * radius);
        }
        heading = wrap_angle(heading + angle);
        pos = center + unit_vector(start + angle) * radius;
    }
};

}  // namespace

Path benchmark_track() {
    // Straight lengths close the loop against the 90 degree corner radii:
    //   x: 105 + 8 - 15 - 128 - 30 + 60 = 0,  y: 8 + 130 + 15 - 30 - 63 - 60 = 0
    Cursor c;
    c.straight(105.0, 2.0);
    c.arc_left(8.0, kPi / 2.0, 1.0);
    c.straight(130.0, 2.0);
    c.arc_left(15.0, kPi / 2.0, 1.0);
    c.straight(128.0, 2.0);
    c.arc_left(30.0, kPi / 2.0, 1.0);
    c.straight(63.0, 2.0);
    c.arc_left(60.0, kPi / 2.0, 1.0);

    // drop the final point, which coincides with the start of the loop
    if ((c.pts.back() - c.pts.front()).norm() < 1e-6) c.pts.pop_back();
    return build_path(std::move(c.pts), true);
}

Path straight_track(double length, double spacing) {
    Cursor c;
    c.straight(length, spacing);
    return build_path(std::move(c.pts), false);
}

Path circle_track(double radius, double max_spacing) {
    Cursor c;
    c.arc_left(radius, 2.0 * kPi, max_spacing);
    if ((c.pts.back() - c.pts.front()).norm() < 1e-6) c.pts.pop_back();
    return build_path(std::move(c.pts), true);
}

}  // namespace trackblend
