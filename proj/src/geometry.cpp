#include "mnet/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace mnet {

namespace {

using Wide = __int128;

int cross_sign(Point o, Point a, Point b) {
    Wide v = Wide(a.x - o.x) * Wide(b.y - o.y) - Wide(a.y - o.y) * Wide(b.x - o.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Anticlockwise hull order of raw indices (Andrew's monotone chain, strict
/// turns only, so collinear points are dropped from the hull).
std::vector<int> strict_hull_order(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    if (n <= 2) return idx;

    std::vector<int> hull(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {  // lower hull, left to right
        int i = idx[ii];
        while (k >= 2 && cross_sign(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    const int lower = k + 1;
    for (int ii = n - 2; ii >= 0; --ii) {  // upper hull, right to left
        int i = idx[ii];
        while (k >= lower && cross_sign(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);  // last point equals the first
    return hull;
}

ConvexInput canonicalize_core(const std::vector<Point>& pts, const std::vector<int>& raw_of) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order = strict_hull_order(pts);
    if (static_cast<int>(order.size()) != n)
        throw Error(Errc::NotConvexPosition, "points are not in strictly convex position");

    // rotate so the topmost point (smallest x on ties) comes first
    int start = 0;
    for (int i = 1; i < n; ++i) {
        Point p = pts[order[i]], q = pts[order[start]];
        if (p.y > q.y || (p.y == q.y && p.x < q.x)) start = i;
    }
    std::rotate(order.begin(), order.begin() + start, order.end());

    ConvexInput out;
    out.points.reserve(n);
    out.raw_index.reserve(n);
    for (int i : order) {
        out.points.push_back(pts[i]);
        out.raw_index.push_back(raw_of[i]);
    }
    for (int i = 0; i < n; ++i) {
        const Point p = out.points[i];
        const Point pl = out.points[out.left];
        const Point pb = out.points[out.bottom];
        const Point pr = out.points[out.right];
        if (p.x < pl.x || (p.x == pl.x && p.y < pl.y)) out.left = i;
        if (p.y < pb.y || (p.y == pb.y && p.x > pb.x)) out.bottom = i;
        if (p.x > pr.x || (p.x == pr.x && p.y > pr.y)) out.right = i;
    }
    return out;
}

}  // namespace

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::BadParams: return "BadParams";
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::NotConvexPosition: return "NotConvexPosition";
        case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case Errc::BadScale: return "BadScale";
        case Errc::CannotReachN: return "CannotReachN";
        case Errc::MonotonicityViolated: return "MonotonicityViolated";
        case Errc::PointNotInNetwork: return "PointNotInNetwork";
        case Errc::InternalGeometry: return "InternalGeometry";
        case Errc::SizeBoundViolated: return "SizeBoundViolated";
        case Errc::MalformedRotation: return "MalformedRotation";
        case Errc::IoError: return "IoError";
        case Errc::SchemaMismatch: return "SchemaMismatch";
    }
    return "UnknownError";
}

Orientation orientation(Point a, Point b, Point c) {
    int s = cross_sign(a, b, c);
    return s > 0 ? Orientation::Anticlockwise : (s < 0 ? Orientation::Clockwise : Orientation::Collinear);
}

Coord l1_distance(Point a, Point b) {
    return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

Point reflect_about_horizontal(Point p, Coord c) { return {p.x, 2 * c - p.y}; }

std::vector<Point> reflect_about_horizontal(std::vector<Point> pts, Coord c) {
    for (Point& p : pts) p = reflect_about_horizontal(p, c);
    return pts;
}

ConvexInput canonicalize(const std::vector<Point>& raw) {
    if (raw.empty()) throw Error(Errc::BadParams, "empty point set");
    for (const Point& p : raw)
        if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
            throw Error(Errc::CoordinateOutOfRange, "coordinate magnitude exceeds 2^30");
    {
        std::vector<Point> s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(Errc::DuplicatePoint, "duplicate input point");
    }

    std::vector<int> ident(raw.size());
    std::iota(ident.begin(), ident.end(), 0);
    ConvexInput ci = canonicalize_core(raw, ident);

    const Point t = ci.points[ci.top];
    const Point b = ci.points[ci.bottom];
    if (t.x > b.x) {
        const Coord c = t.y + 1;
        ConvexInput m = canonicalize_core(reflect_about_horizontal(raw, c), ident);
        m.mirrored = true;
        m.mirror_line = c;
        if (m.points[m.top].x > m.points[m.bottom].x)
            throw Error(Errc::InternalGeometry, "mirroring did not normalize the extremes");
        return m;
    }
    return ci;
}

}  // namespace mnet
