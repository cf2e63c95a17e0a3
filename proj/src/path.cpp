#include "trackblend/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trackblend/errors.hpp"

namespace trackblend {

namespace {

double segment_heading(const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    return wrap_angle(std::atan2(d.y, d.x));
}

/// Arc length wrapped into [0, total) for closed paths, validated for open ones.
/// Rounding slack of a few ulps at the range ends is clamped, not rejected.
double normalize_s(const Path& path, double s, const char* op) {
    const double total = path.total_length();
    if (path.closed) {
        double r = std::fmod(s, total);
        if (r < 0.0) r += total;
        return r;
    }
    const double slack = 1e-9 * std::max(1.0, total);
    if (s < -slack || s > total + slack) {
        throw OutOfRange(std::string(op) + ": arc length " + std::to_string(s) +
                         " outside [0, " + std::to_string(total) + "]");
    }
    return std::clamp(s, 0.0, total);
}

/// Index of the segment containing arc length s (s already normalized).
/// On an open path s == total maps to the last segment.
std::size_t segment_index_at(const Path& path, double s) {
    const auto& cs = path.cumulative_s;
    auto it = std::upper_bound(cs.begin(), cs.end(), s);
    std::size_t idx = (it == cs.begin()) ? 0 : static_cast<std::size_t>(it - cs.begin()) - 1;
    const std::size_t last = path.segment_count() - 1;
    return std::min(idx, last);
}

/// Miter normal at a joint between segment directions u_prev and u_next:
/// offsetting by w * m keeps the point at distance w from both segment lines.
Vec2 miter_normal(const Vec2& u_prev, const Vec2& u_next, std::size_t joint_index) {
    const Vec2 n1 = u_prev.perp();
    const Vec2 n2 = u_next.perp();
    const double denom = 1.0 + n1.dot(n2);
    if (denom < 1e-9) throw SelfIntersectingOffset(joint_index);
    return (n1 + n2) * (1.0 / denom);
}

std::vector<Vec2> offset_waypoints(const Path& center, double signed_width) {
    const std::size_t n = center.waypoints.size();
    std::vector<Vec2> dirs(center.segment_count());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        dirs[i] = (center.segment_end(i) - center.segment_start(i)).normalized();
    }

    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 m;
        if (center.closed) {
            const Vec2& prev = dirs[(i + dirs.size() - 1) % dirs.size()];
            m = miter_normal(prev, dirs[i], i);
        } else if (i == 0) {
            m = dirs[0].perp();
        } else if (i == n - 1) {
            m = dirs[n - 2].perp();
        } else {
            m = miter_normal(dirs[i - 1], dirs[i], i);
        }
        out[i] = center.waypoints[i] + m * signed_width;
    }
    return out;
}

/// A fold (offset segment reversing against its source segment) marks the
/// width exceeding the local turn radius.
void validate_offset(const Path& center, const std::vector<Vec2>& offset) {
    for (std::size_t i = 0; i < center.segment_count(); ++i) {
        const Vec2 u = center.segment_end(i) - center.segment_start(i);
        const Vec2 q = offset[(i + 1) % offset.size()] - offset[i];
        if (q.dot(u) <= 0.0) throw SelfIntersectingOffset(i);
    }
}

/// Minimum ray parameter t >= 0 hitting any segment of the polyline, or +inf.
double ray_polyline_min_t(const std::vector<Vec2>& pts, bool closed, const Vec2& origin,
                          const Vec2& dir) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t nseg = closed ? pts.size() : pts.size() - 1;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Vec2& a = pts[i];
        const Vec2 b = pts[(i + 1) % pts.size()];
        const Vec2 e = b - a;
        const double denom = dir.cross(e);
        if (std::abs(denom) < 1e-14) continue;  // parallel
        const Vec2 ao = a - origin;
        const double t = ao.cross(e) / denom;
        const double u = ao.cross(dir) / denom;
        if (t >= 0.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
    }
    return best;
}

}  // namespace

double Path::total_length() const {
    if (!closed) return cumulative_s.back();
    return cumulative_s.back() + (waypoints.front() - waypoints.back()).norm();
}

double Path::segment_length(std::size_t i) const {
    if (i + 1 < cumulative_s.size()) return cumulative_s[i + 1] - cumulative_s[i];
    return (waypoints.front() - waypoints.back()).norm();
}

Path build_path(std::vector<Vec2> waypoints, bool closed) {
    if (waypoints.size() < 2) throw TooFewPoints(waypoints.size());

    Path path;
    path.closed = closed;
    path.cumulative_s.resize(waypoints.size());
    path.cumulative_s[0] = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        const double len = (waypoints[i + 1] - waypoints[i]).norm();
        if (len <= 0.0) throw DegenerateSegment(i);
        path.cumulative_s[i + 1] = path.cumulative_s[i] + len;
    }
    if (closed && (waypoints.front() - waypoints.back()).norm() <= 0.0) {
        throw DegenerateSegment(waypoints.size() - 1);
    }
    path.waypoints = std::move(waypoints);
    return path;
}

Path reverse_path(const Path& path) {
    std::vector<Vec2> pts(path.waypoints.rbegin(), path.waypoints.rend());
    if (path.closed) {
        // keep the same start point so arc lengths stay anchored there
        std::rotate(pts.begin(), pts.end() - 1, pts.end());
    }
    return build_path(std::move(pts), path.closed);
}

Vec2 point_at(const Path& path, double s) {
    const double sn = normalize_s(path, s, "point_at");
    const std::size_t i = segment_index_at(path, sn);
    const double local = sn - path.cumulative_s[i];
    const Vec2 a = path.segment_start(i);
    const Vec2 u = (path.segment_end(i) - a).normalized();
    return a + u * local;
}

double tangent_at(const Path& path, double s) {
    const double sn = normalize_s(path, s, "tangent_at");
    const std::size_t i = segment_index_at(path, sn);
    return segment_heading(path.segment_start(i), path.segment_end(i));
}

PathProjection project(const Path& path, const Vec2& point) {
    PathProjection best;
    double best_dist_sq = std::numeric_limits<double>::infinity();
    double best_u = 0.0;
    Vec2 best_point;

    const std::size_t nseg = path.segment_count();
    for (std::size_t i = 0; i < nseg; ++i) {
        const Vec2 a = path.segment_start(i);
        const Vec2 b = path.segment_end(i);
        const Vec2 e = b - a;
        const double len_sq = e.norm_sq();
        const double u = std::clamp((point - a).dot(e) / len_sq, 0.0, 1.0);
        const Vec2 q = a + e * u;
        const double dist_sq = (point - q).norm_sq();
        // ascending iteration + strict less keeps the smallest s on ties
        if (dist_sq < best_dist_sq) {
            best_dist_sq = dist_sq;
            best_point = q;
            best_u = u;
            best.segment_index = i;
            // u * stored length keeps s consistent with the cumulative table
            best.s = path.cumulative_s[i] + u * path.segment_length(i);
        }
    }

    const std::size_t i = best.segment_index;
    auto direction = [&path](std::size_t seg) {
        return (path.segment_end(seg) - path.segment_start(seg)).normalized();
    };

    // Side sign: left normal of the segment at interior projections; at a
    // vertex projection the angle-bisecting pseudo-normal of both adjacent
    // segments, which stays consistent on sharp corners and under reversal.
    Vec2 normal = direction(i).perp();
    if (best_u >= 1.0 && (path.closed || i + 1 < nseg)) {
        normal = normal + direction((i + 1) % nseg).perp();
    } else if (best_u <= 0.0 && (path.closed || i > 0)) {
        normal = normal + direction((i + nseg - 1) % nseg).perp();
    }
    if (normal.norm_sq() < 1e-18) normal = direction(i).perp();  // fold-back vertex

    const double side = normal.dot(point - best_point);
    const double dist = std::sqrt(best_dist_sq);
    best.e_d = (side < 0.0) ? -dist : dist;
    best.tangent_heading = segment_heading(path.segment_start(i), path.segment_end(i));
    return best;
}

double curvature_change(const Path& path, double from_s, double vehicle_heading,
                        double lookahead) {
    if (lookahead <= 0.0) throw OutOfRange("curvature_change: lookahead must be positive");
    normalize_s(path, from_s, "curvature_change");
    double target = from_s + lookahead;
    if (!path.closed) target = std::min(target, path.total_length());
    return wrap_angle(tangent_at(path, target) - vehicle_heading);
}

Path offset_border(const Corridor& corridor, Side side) {
    if (corridor.width <= 0.0) throw OutOfRange("offset_border: corridor width must be positive");
    const double w = (side == Side::left) ? corridor.width : -corridor.width;
    auto pts = offset_waypoints(corridor.center, w);
    validate_offset(corridor.center, pts);
    return build_path(std::move(pts), corridor.center.closed);
}

Path offset_border_unchecked(const Corridor& corridor, Side side) {
    if (corridor.width <= 0.0) throw OutOfRange("offset_border: corridor width must be positive");
    const double w = (side == Side::left) ? corridor.width : -corridor.width;
    return build_path(offset_waypoints(corridor.center, w), corridor.center.closed);
}

double ray_path_distance(const Path& polyline, const Vec2& origin, double heading,
                         double max_range) {
    if (max_range <= 0.0) throw OutOfRange("ray_path_distance: max_range must be positive");
    const double t =
        ray_polyline_min_t(polyline.waypoints, polyline.closed, origin, unit_vector(heading));
    return std::min(t, max_range);
}

double ray_border_distance(const Corridor& corridor, const Vec2& origin, double heading,
                           double max_range) {
    const double left =
        ray_path_distance(offset_border_unchecked(corridor, Side::left), origin, heading,
                          max_range);
    const double right =
        ray_path_distance(offset_border_unchecked(corridor, Side::right), origin, heading,
                          max_range);
    return std::min(left, right);
}

}  // namespace trackblend
