#include "mnet/ortho_polygon.hpp"

#include <algorithm>
#include <set>

namespace mnet {

namespace {

/// Allowed coordinate drift along a chain and the corner placement rule.
/// The corner always bulges away from the hull so the input points stay on
/// the boundary of the resulting polygon.
struct ChainRule {
    int sx;  // sign of x(p_{j+1}) - x(p_j): -1 non-increasing, +1 non-decreasing
    int sy;
    bool corner_takes_next_x;  // corner = (x(next), y(cur)) vs (x(cur), y(next))
};

ChainRule rule_for(ChainKind kind) {
    switch (kind) {
        case ChainKind::TL: return {-1, -1, true};
        case ChainKind::LB: return {+1, -1, false};
        case ChainKind::BR: return {+1, +1, true};
        case ChainKind::RT: return {-1, +1, false};
    }
    return {0, 0, false};
}

}  // namespace

std::vector<OcpVertex> build_chain(std::span<const Point> pts, ChainKind kind) {
    if (pts.empty()) throw Error(Errc::BadParams, "empty chain");
    const ChainRule r = rule_for(kind);
    std::vector<OcpVertex> out;
    out.reserve(2 * pts.size());
    out.push_back({pts[0], PointClass::Original, -1});
    for (size_t j = 0; j + 1 < pts.size(); ++j) {
        const Point a = pts[j], b = pts[j + 1];
        const Coord dx = b.x - a.x, dy = b.y - a.y;
        if ((dx == 0 && dy == 0) || dx * r.sx < 0 || dy * r.sy < 0)
            throw Error(Errc::MonotonicityViolated, "chain input is not monotone for its kind");
        if (dx != 0 && dy != 0) {
            Point corner = r.corner_takes_next_x ? Point{b.x, a.y} : Point{a.x, b.y};
            out.push_back({corner, PointClass::Steiner, -1});
        }
        out.push_back({b, PointClass::Original, -1});
    }
    return out;
}

OrthoPolygon build_ocp(const ConvexInput& ci) {
    const int n = static_cast<int>(ci.points.size());
    if (n < 3) throw Error(Errc::BadParams, "ortho-convex polygon needs at least 3 points");
    const int l = ci.left, b = ci.bottom;
    // when the topmost point is also the rightmost, r appears as the wrap
    // vertex at extended index n
    const int r = (ci.right == 0) ? n : ci.right;
    if (!(0 <= l && l <= b && b <= r && r <= n))
        throw Error(Errc::InternalGeometry, "extreme points out of anticlockwise order");

    std::vector<Point> ext = ci.points;  // extended with the wrap vertex
    ext.push_back(ci.points[0]);
    auto span_of = [&](int from, int to) {
        return std::span<const Point>(ext.data() + from, static_cast<size_t>(to - from + 1));
    };

    struct Piece {
        std::vector<OcpVertex> verts;
        int first_orig;  // extended index of the piece's first original point
    };
    Piece pieces[4] = {
        {build_chain(span_of(0, l), ChainKind::TL), 0},
        {build_chain(span_of(l, b), ChainKind::LB), l},
        {build_chain(span_of(b, r), ChainKind::BR), b},
        {build_chain(span_of(r, n), ChainKind::RT), r},
    };

    OrthoPolygon ocp;
    ocp.orig_pos.assign(n, -1);
    for (auto& piece : pieces) {
        int next_orig = piece.first_orig;
        for (size_t i = 0; i < piece.verts.size(); ++i) {
            OcpVertex v = piece.verts[i];
            if (v.cls == PointClass::Original) v.orig = (next_orig++) % n;
            if (i == 0 && !ocp.boundary.empty()) continue;  // junction already emitted
            ocp.boundary.push_back(v);
        }
    }
    ocp.boundary.pop_back();  // wrap point == boundary[0]

    for (size_t pos = 0; pos < ocp.boundary.size(); ++pos) {
        const OcpVertex& v = ocp.boundary[pos];
        if (v.cls == PointClass::Original) ocp.orig_pos[v.orig] = static_cast<int>(pos);
    }
    for (int i = 0; i < n; ++i)
        if (ocp.orig_pos[i] < 0)
            throw Error(Errc::InternalGeometry, "input point missing from boundary");
    ocp.pos_t = ocp.orig_pos[0];
    ocp.pos_l = ocp.orig_pos[l];
    ocp.pos_b = ocp.orig_pos[b];
    ocp.pos_r = ocp.orig_pos[r];
    if (ocp.pos_t != 0) throw Error(Errc::InternalGeometry, "boundary does not start at the top");

    // structural validation: axis-parallel, distinct, no repeated vertex
    const size_t m = ocp.boundary.size();
    std::set<Point> seen;
    for (size_t i = 0; i < m; ++i) {
        const Point a = ocp.boundary[i].p, bb = ocp.boundary[(i + 1) % m].p;
        if (a == bb || (a.x != bb.x && a.y != bb.y))
            throw Error(Errc::InternalGeometry, "boundary edge not axis-parallel");
        if (!seen.insert(a).second)
            throw Error(Errc::InternalGeometry, "repeated boundary vertex");
    }
    if (m > 2 * static_cast<size_t>(n))
        throw Error(Errc::SizeBoundViolated, "boundary exceeds 2n vertices");
    return ocp;
}

bool on_chain(const OrthoPolygon& ocp, int pos, ChainKind kind) {
    const int m = static_cast<int>(ocp.boundary.size());
    if (pos < 0 || pos >= m) return false;
    const int end_br = (ocp.pos_r == 0) ? m : ocp.pos_r;  // unwrapped BR end
    switch (kind) {
        case ChainKind::TL: return pos >= ocp.pos_t && pos <= ocp.pos_l;
        case ChainKind::LB: return pos >= ocp.pos_l && pos <= ocp.pos_b;
        case ChainKind::BR:
            return (pos >= ocp.pos_b && pos < end_br) || pos == ocp.pos_r;
        case ChainKind::RT: return pos >= end_br || pos == ocp.pos_t;
    }
    return false;
}

}  // namespace mnet
