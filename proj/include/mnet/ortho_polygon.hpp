#pragma once

#include <span>
#include <vector>

#include "mnet/geometry.hpp"

namespace mnet {

/// The four xy-monotone chains of the canonical anticlockwise traversal:
/// top->left, left->bottom, bottom->right, right->top.
enum class ChainKind { TL, LB, BR, RT };

enum class PointClass { Original, Steiner };

struct OcpVertex {
    Point p;
    PointClass cls = PointClass::Steiner;
    int orig = -1;  ///< canonical point index when cls == Original
};

/// Ortho-convex polygon spanned by a convex point set: every input point lies
/// on the boundary, all edges are axis-parallel, and the intersection with any
/// axis-parallel line is a single (possibly empty) segment.
struct OrthoPolygon {
    std::vector<OcpVertex> boundary;  ///< anticlockwise cycle, starts at the topmost point
    std::vector<int> orig_pos;        ///< canonical point index -> boundary position
    int pos_t = 0, pos_l = 0, pos_b = 0, pos_r = 0;
};

/// Insert the bulging-outward corner between every non-axis-aligned
/// consecutive pair. Chain input must be monotone for its kind.
std::vector<OcpVertex> build_chain(std::span<const Point> pts, ChainKind kind);

/// Pre: ci has at least 3 points.
OrthoPolygon build_ocp(const ConvexInput& ci);

/// True when boundary position pos lies on the given chain (the four extreme
/// vertices belong to both adjacent chains).
bool on_chain(const OrthoPolygon& ocp, int pos, ChainKind kind);

}  // namespace mnet
