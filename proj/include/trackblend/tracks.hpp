#pragma once

#include "trackblend/path.hpp"

namespace trackblend {

/// Standard closed benchmark loop: four straights (105, 130, 128, 63 m) joined
/// by 90-degree left arcs of radii 8, 15, 30 and 60 m; total length ~603.5 m.
Path benchmark_track();

/// Open straight track along +x starting at the origin.
Path straight_track(double length, double spacing = 2.0);

/// Closed circular track of the given radius, sampled counter-clockwise.
Path circle_track(double radius, double max_spacing = 1.0);

}  // namespace trackblend
