#pragma once

#include <cstddef>
#include <vector>

#include "trackblend/geometry.hpp"

namespace trackblend {

/// Polyline reference trajectory with arc-length parameterization.
///
/// `cumulative_s[i]` is the arc length at waypoint i (cumulative_s[0] == 0).
/// A closed path has an implicit closing segment from the last waypoint back
/// to the first; arc-length queries wrap modulo the total length.
struct Path {
    std::vector<Vec2> waypoints;
    std::vector<double> cumulative_s;
    bool closed = false;

    std::size_t segment_count() const {
        return closed ? waypoints.size() : waypoints.size() - 1;
    }
    double total_length() const;

    /// Start point and unit direction of segment i.
    Vec2 segment_start(std::size_t i) const { return waypoints[i]; }
    Vec2 segment_end(std::size_t i) const {
        return waypoints[(i + 1) % waypoints.size()];
    }
    double segment_length(std::size_t i) const;
};

/// Nearest-point query result.
struct PathProjection {
    double s = 0.0;                ///< arc length of the nearest point (m)
    double e_d = 0.0;              ///< signed lateral distance, positive left of the tangent (m)
    double tangent_heading = 0.0;  ///< segment heading at the projection, in (-pi, pi]
    std::size_t segment_index = 0;
};

/// Centerline plus a constant half-width defining the virtual borders.
struct Corridor {
    Path center;
    double width = 0.0;  ///< half-width w > 0 (m)
};

/// Validates waypoints and computes the arc-length table.
/// Throws TooFewPoints or DegenerateSegment (with the offending index).
Path build_path(std::vector<Vec2> waypoints, bool closed);

/// Same path traversed in the opposite direction.
Path reverse_path(const Path& path);

/// Point on the path at arc length s (wraps when closed, throws OutOfRange otherwise).
Vec2 point_at(const Path& path, double s);

/// Heading of the segment containing s; at a vertex, the following segment.
/// s == total_length on an open path returns the last segment heading.
double tangent_at(const Path& path, double s);

/// Globally nearest point over all segments; ties broken toward smaller s.
PathProjection project(const Path& path, const Vec2& point);

/// Wrapped heading difference between the path tangent at from_s + lookahead
/// and the vehicle heading. On open paths the lookahead clamps to the end.
double curvature_change(const Path& path, double from_s, double vehicle_heading,
                        double lookahead);

enum class Side { left, right };

/// Border polyline at +/- width from the centerline (miter joins at vertices).
/// Throws SelfIntersectingOffset when the width exceeds the local turn radius.
Path offset_border(const Corridor& corridor, Side side);

/// Same offset without the fold validation: where the width exceeds the local
/// turn radius the polyline folds over instead of failing, which keeps ray
/// queries total on tight inner arcs.
Path offset_border_unchecked(const Corridor& corridor, Side side);

/// First intersection distance of the ray (origin, heading) with the
/// polyline, capped at max_range; max_range when nothing is hit.
double ray_path_distance(const Path& polyline, const Vec2& origin, double heading,
                         double max_range);

/// First intersection distance of the ray with either (unchecked) border,
/// capped at max_range; max_range when nothing is hit.
double ray_border_distance(const Corridor& corridor, const Vec2& origin, double heading,
                           double max_range);

}  // namespace trackblend
