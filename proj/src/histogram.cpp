#include "mnet/histogram.hpp"

#include <algorithm>

namespace mnet {

namespace {

/// Monotone walker over a boundary profile (a list of vertices whose key
/// coordinate never decreases). Queries must arrive with non-decreasing keys;
/// each walker advances at most once over the profile in total.
struct ProfileWalker {
    std::vector<Point> prof;
    size_t ptr = 0;
    long* steps;

    // bottom of the polygon at a given x; prof runs left -> bottom -> right
    Coord bottom_y_at(Coord x) {
        while (ptr + 1 < prof.size() && prof[ptr + 1].x <= x) { ++ptr; ++*steps; }
        if (prof[ptr].x == x) {
            Coord y = prof[ptr].y;
            if (ptr > 0 && prof[ptr - 1].x == x) y = std::min(y, prof[ptr - 1].y);
            return y;
        }
        if (ptr + 1 >= prof.size() || prof[ptr].x > x)
            throw Error(Errc::InternalGeometry, "bottom profile query out of range");
        return prof[ptr].y;  // interior of a horizontal edge
    }

    // rightmost extent at a given y; prof runs top -> right -> bottom with
    // non-increasing y, so keys are negated to reuse the same advance rule
    Coord right_x_at(Coord y) {
        while (ptr + 1 < prof.size() && prof[ptr + 1].y >= y) { ++ptr; ++*steps; }
        if (prof[ptr].y == y) {
            Coord x = prof[ptr].x;
            if (ptr > 0 && prof[ptr - 1].y == y) x = std::max(x, prof[ptr - 1].x);
            return x;
        }
        if (ptr + 1 >= prof.size() || prof[ptr].y < y)
            throw Error(Errc::InternalGeometry, "right profile query out of range");
        return prof[ptr].x;  // interior of a vertical edge
    }
};

}  // namespace

int hist_base_cut(int hist_id) { return hist_id <= 1 ? 1 : hist_id; }

bool hist_sees(const HistogramPartition& hp, int hist_id, Point p) {
    if (hp.cuts.empty() || hist_id < 0 || hist_id > (int)hp.cuts.size()) return false;
    const CutSegment& c1 = hp.cuts[0];
    if (hist_id <= 1) {
        if (!(p.y >= c1.to.y && p.y <= c1.from.y)) return false;
        return hist_id == 0 ? p.x <= c1.to.x : p.x >= c1.to.x;
    }
    const CutSegment& c = hp.cuts[hist_id - 1];
    if (c.vertical)  // right histogram of a vertical cut
        return p.y >= c.to.y && p.y <= c.from.y && p.x >= c.to.x;
    return p.x >= c.from.x && p.x <= c.to.x && p.y <= c.to.y;  // below a horizontal cut
}

Termination classify_termination(const HistogramPartition& hp, const ConvexInput& ci) {
    const int k = (int)hp.cuts.size();
    if (k <= 0) throw Error(Errc::BadParams, "empty partition");
    if (k == 1) return Termination::DegenerateK1;
    if (k == 2) return Termination::DegenerateK2;
    const CutSegment& last = hp.cuts[k - 1];
    const CutSegment& prev = hp.cuts[k - 2];
    if (last.vertical) {
        // previous cut is horizontal, left end prev.from, right end prev.to
        const Coord xb = ci.points[ci.bottom].x;
        return (xb >= prev.from.x && xb <= prev.to.x) ? Termination::Type1 : Termination::Type2;
    }
    const Coord yr = ci.points[ci.right].y;  // previous cut vertical, runs downward
    return (yr <= prev.from.y && yr >= prev.to.y) ? Termination::Type3 : Termination::Type4;
}

HistogramPartition partition(const OrthoPolygon& ocp, const ConvexInput& ci) {
    const int n = (int)ci.points.size();
    const auto& pts = ci.points;
    HistogramPartition hp;
    hp.assignment.assign(n, -1);

    // lower profile l -> b -> r (x non-decreasing), right profile t -> r -> b
    // (y non-increasing, walking the boundary backward from the top)
    ProfileWalker lower, right;
    lower.steps = right.steps = &hp.walk_steps;
    const int m = (int)ocp.boundary.size();
    const int end_br = (ocp.pos_r == 0) ? m : ocp.pos_r;
    for (int i = ocp.pos_l; i <= end_br; ++i) {
        lower.prof.push_back(ocp.boundary[i % m].p);
        ++hp.walk_steps;
    }
    for (int i = 0; i >= end_br - m; --i) {
        right.prof.push_back(ocp.boundary[((i % m) + m) % m].p);
        ++hp.walk_steps;
    }
    {  // extend the right profile down to the bottommost vertex
        int i = end_br - m;
        while (((i % m) + m) % m != ocp.pos_b) {
            --i;
            right.prof.push_back(ocp.boundary[((i % m) + m) % m].p);
            ++hp.walk_steps;
        }
    }

    const Point t = pts[0];
    int a = 0, b = n - 1;  // unseen points form the canonical-order arc [a, b]
    Point q_prev = t;
    for (int index = 1;; ++index) {
        if (index > 4 * n + 8)
            throw Error(Errc::InternalGeometry, "cut spiral failed to terminate");
        CutSegment cut;
        cut.index = index;
        cut.from = q_prev;
        if (index % 2 == 1) {
            cut.vertical = true;
            cut.to = {q_prev.x, lower.bottom_y_at(q_prev.x)};
            if (!(cut.to.y < q_prev.y))
                throw Error(Errc::InternalGeometry, "vertical cut does not advance");
        } else {
            cut.vertical = false;
            cut.to = {right.right_x_at(q_prev.y), q_prev.y};
            if (!(cut.to.x > q_prev.x))
                throw Error(Errc::InternalGeometry, "horizontal cut does not advance");
        }
        hp.cuts.push_back(cut);

        auto member = [&](Point p) { return index == 1 ? hist_sees(hp, 0, p) || hist_sees(hp, 1, p)
                                                       : hist_sees(hp, index, p); };
        auto assign = [&](int i) {
            hp.assignment[i] =
                index == 1 ? (pts[i].x <= cut.to.x ? 0 : 1) : index;
        };
        while (a <= b && member(pts[a])) assign(a++);
        while (b >= a && member(pts[b])) assign(b--);
        q_prev = cut.to;
        if (a > b) break;
    }

    if ((int)hp.cuts.size() > n)
        throw Error(Errc::InternalGeometry, "cut count exceeds point count");
    for (int i = 0; i < n; ++i)  // every point seen by its assigned histogram
        if (hp.assignment[i] < 0 || !hist_sees(hp, hp.assignment[i], pts[i]))
            throw Error(Errc::InternalGeometry, "histogram assignment incomplete");
    // strict interleaving of the alternating cuts
    for (size_t i = 2; i < hp.cuts.size(); ++i) {
        const CutSegment& c = hp.cuts[i], & p2 = hp.cuts[i - 2];
        if (c.vertical ? !(c.to.x > p2.to.x) : !(c.to.y < p2.to.y))
            throw Error(Errc::InternalGeometry, "cut interleaving violated");
    }
    hp.termination = classify_termination(hp, ci);
    return hp;
}

}  // namespace mnet
