#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mnet {

using Coord = std::int64_t;

/// Inputs are validated against this bound; internal intermediates (mirrored
/// copies, cut coordinates) may exceed it but stay well inside int64 range.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Errc {
    BadParams,
    DuplicatePoint,
    NotConvexPosition,
    CoordinateOutOfRange,
    BadScale,
    CannotReachN,
    MonotonicityViolated,
    PointNotInNetwork,
    InternalGeometry,
    SizeBoundViolated,
    MalformedRotation,
    IoError,
    SchemaMismatch,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

const char* errc_name(Errc c);

enum class Orientation { Clockwise = -1, Collinear = 0, Anticlockwise = 1 };

/// Exact sign of the cross product (b-a) x (c-a).
Orientation orientation(Point a, Point b, Point c);

Coord l1_distance(Point a, Point b);

/// A convex point set in canonical form: anticlockwise order starting at the
/// topmost point (smallest x on ties), mirrored across y = y(p1)+1 when the
/// topmost point started out strictly right of the bottommost one.
struct ConvexInput {
    std::vector<Point> points;     ///< canonical anticlockwise order
    std::vector<int> raw_index;    ///< canonical position -> position in the raw input
    bool mirrored = false;
    Coord mirror_line = 0;         ///< y = mirror_line was the reflection axis (valid when mirrored)
    int top = 0;                   ///< index of t in points (always 0)
    int left = 0;
    int bottom = 0;
    int right = 0;
};

/// Reflect every point across the horizontal line y = c.
std::vector<Point> reflect_about_horizontal(std::vector<Point> pts, Coord c);
Point reflect_about_horizontal(Point p, Coord c);

/// Validate (range, duplicates, strict convex position) and produce the
/// canonical ordering. Throws Error with one of BadParams, DuplicatePoint,
/// NotConvexPosition, CoordinateOutOfRange.
ConvexInput canonicalize(const std::vector<Point>& raw);

}  // namespace mnet
