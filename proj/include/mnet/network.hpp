#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mnet/geometry.hpp"
#include "mnet/ortho_polygon.hpp"

namespace mnet {

/// Axis-parallel closed segment. Endpoints may coincide (zero length).
struct Segment {
    Point a;
    Point b;
};

/// Orthogonal projection of q onto the line through an axis-parallel segment,
/// returned only when the foot lies within the closed segment.
std::optional<Point> project_point(Point q, const Segment& seg);

struct NetVertex {
    Point p;
    PointClass cls = PointClass::Steiner;
};

/// Geometric graph with axis-parallel edges whose weight is the l1 distance
/// of the endpoints. Ids are dense: the n input points come first in input
/// order, then Steiner points in creation order. Edges are normalized
/// (lo < hi) and sorted, with no duplicates.
struct Network {
    int n_original = 0;
    std::vector<NetVertex> vertices;
    std::vector<std::array<int, 2>> edges;

    /// Weighted adjacency lists: for each vertex, (neighbor id, edge weight).
    std::vector<std::vector<std::pair<int, Coord>>> adjacency() const;
};

/// Builds a Manhattan network on a canonicalized convex point set: every pair
/// of input points is joined by a path of total weight exactly their l1
/// distance. Guarantees |V| <= 4n (at most three Steiner vertices per input
/// point), |E| <= 6n, connectivity, and positive axis-parallel edges; the
/// tighter 5n edge budget is met on staircase-shaped inputs but not on every
/// convex input (dense circular arcs approach 6n). Coordinates are reported
/// in the original (unmirrored) frame of the raw input.
Network build_network(const ConvexInput& ci);

/// Convenience overload: canonicalize + build.
Network build_network(const std::vector<Point>& raw_points);

}  // namespace mnet
