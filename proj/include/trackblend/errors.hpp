#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trackblend {

struct TooFewPoints : std::runtime_error {
    explicit TooFewPoints(std::size_t count)
        : std::runtime_error("path requires at least 2 waypoints, got " + std::to_string(count)) {}
};

struct DegenerateSegment : std::runtime_error {
    std::size_t index;
    explicit DegenerateSegment(std::size_t i)
        : std::runtime_error("zero-length segment starting at waypoint " + std::to_string(i)),
          index(i) {}
};

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct SelfIntersectingOffset : std::runtime_error {
    std::size_t segment;
    explicit SelfIntersectingOffset(std::size_t seg)
        : std::runtime_error("offset width exceeds local turn radius near segment " +
                             std::to_string(seg)),
          segment(seg) {}
};

struct AlphaOutOfRange : std::runtime_error {
    explicit AlphaOutOfRange(double alpha)
        : std::runtime_error("blend weight alpha must be in [0, 1], got " +
                             std::to_string(alpha)) {}
};

struct NonPositiveDt : std::runtime_error {
    explicit NonPositiveDt(double dt)
        : std::runtime_error("time step must be positive, got " + std::to_string(dt)) {}
};

/// Config or track file parse failure; `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

struct UnknownKey : std::runtime_error {
    std::string key;
    explicit UnknownKey(const std::string& k)
        : std::runtime_error("unknown config key: " + k), key(k) {}
};

}  // namespace trackblend
