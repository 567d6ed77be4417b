#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "mnet/geometry.hpp"
#include "mnet/histogram.hpp"
#include "mnet/ortho_polygon.hpp"

using namespace mnet;

namespace {

// ---- oracle: exact point-in-closed-rectilinear-polygon on doubled coords ----

struct DoubledPolygon {
    std::vector<Point> v;  // doubled coordinates
    explicit DoubledPolygon(const OrthoPolygon& ocp) {
        for (const auto& b : ocp.boundary) v.push_back({2 * b.p.x, 2 * b.p.y});
    }
    bool on_boundary(Point p) const {
        for (size_t i = 0; i < v.size(); ++i) {
            Point a = v[i], b = v[(i + 1) % v.size()];
            if (a.x == b.x && p.x == a.x && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y))
                return true;
            if (a.y == b.y && p.y == a.y && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x))
                return true;
        }
        return false;
    }
    bool contains(Point p) const {  // closed region
        if (on_boundary(p)) return true;
        int crossings = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            Point a = v[i], b = v[(i + 1) % v.size()];
            if (a.x != b.x) continue;  // vertical edges only
            Coord lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
            if (a.x > p.x && lo <= p.y && p.y < hi) ++crossings;  // half-open rule
        }
        return crossings % 2 == 1;
    }
};

// proj of p onto the line of the cut, as a point (same x for horizontal cuts)
Point cut_projection(const CutSegment& c, Point p) {
    return c.vertical ? Point{c.from.x, p.y} : Point{p.x, c.from.y};
}

bool projection_on_segment(const CutSegment& c, Point p) {
    Point q = cut_projection(c, p);
    if (c.vertical)
        return q.y >= std::min(c.from.y, c.to.y) && q.y <= std::max(c.from.y, c.to.y);
    return q.x >= std::min(c.from.x, c.to.x) && q.x <= std::max(c.from.x, c.to.x);
}

// every point has a cut it projects onto, and the projection segment stays in
// the polygon (by ortho-convexity it is enough that both ends and the midpoint
// lie inside; checked exactly on doubled coordinates)
void check_see_all(const OrthoPolygon& ocp, const ConvexInput& ci, const HistogramPartition& hp) {
    DoubledPolygon dp(ocp);
    for (Point p : ci.points) {
        bool seen = false;
        for (const auto& c : hp.cuts) {
            if (!projection_on_segment(c, p)) continue;
            Point q = cut_projection(c, p);
            Point p2{2 * p.x, 2 * p.y}, q2{2 * q.x, 2 * q.y};
            Point mid{(p2.x + q2.x) / 2, (p2.y + q2.y) / 2};
            if (dp.contains(q2) && dp.contains(mid)) {
                seen = true;
                break;
            }
        }
        CHECK(seen);
    }
}

// recompute the assignment the slow way: earliest cut whose set definition
// contains the point; within cut 1 the left histogram wins ties on the line
void check_assignment(const ConvexInput& ci, const HistogramPartition& hp) {
    const int k = (int)hp.cuts.size();
    REQUIRE((int)hp.assignment.size() == (int)ci.points.size());
    for (size_t i = 0; i < ci.points.size(); ++i) {
        Point p = ci.points[i];
        int expect = -1;
        for (int cut = 1; cut <= k && expect < 0; ++cut) {
            if (cut == 1) {
                if (hist_sees(hp, 0, p)) expect = 0;
                else if (hist_sees(hp, 1, p)) expect = 1;
            } else if (hist_sees(hp, cut, p)) {
                expect = cut;
            }
        }
        CHECK(hp.assignment[i] == expect);
    }
}

void check_invariants(const OrthoPolygon& ocp, const ConvexInput& ci, const HistogramPartition& hp) {
    const int n = (int)ci.points.size();
    const int k = (int)hp.cuts.size();
    REQUIRE(k >= 1);
    CHECK(k <= n);
    DoubledPolygon dp(ocp);
    for (int i = 0; i < k; ++i) {
        const auto& c = hp.cuts[i];
        CHECK(c.index == i + 1);
        CHECK(c.vertical == (i % 2 == 0));  // odd cuts vertical (1-based)
        if (c.vertical) {
            CHECK(c.from.x == c.to.x);
            CHECK(c.from.y > c.to.y);  // drawn downward
        } else {
            CHECK(c.from.y == c.to.y);
            CHECK(c.from.x < c.to.x);  // drawn rightward
        }
        CHECK(dp.on_boundary({2 * c.to.x, 2 * c.to.y}));  // q_i on the boundary
        if (i == 0) CHECK(c.from == ci.points[0]);
        else CHECK(c.from == hp.cuts[i - 1].to);
        if (i >= 2) {  // strict interleaving
            const auto& prev = hp.cuts[i - 2];
            if (c.vertical) CHECK(c.to.x > prev.to.x);
            else CHECK(c.to.y < prev.to.y);
        }
    }
    check_see_all(ocp, ci, hp);
    check_assignment(ci, hp);
    CHECK(hp.walk_steps <= 8 * (long)(n + k) + 16);
    CHECK(classify_termination(hp, ci) == hp.termination);
}

HistogramPartition run(const std::vector<Point>& raw, ConvexInput* out_ci = nullptr) {
    ConvexInput ci = canonicalize(raw);
    OrthoPolygon ocp = build_ocp(ci);
    HistogramPartition hp = partition(ocp, ci);
    check_invariants(ocp, ci, hp);
    if (out_ci) *out_ci = ci;
    return hp;
}

std::vector<Point> circle_set(int n, unsigned seed, long long radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    std::set<Point> used;
    std::vector<Point> out;
    int guard = 0;
    while ((int)out.size() < n && ++guard < 100000) {
        double a = ang(rng);
        Point p{(Coord)llround(radius * std::cos(a)), (Coord)llround(radius * std::sin(a))};
        if (!used.insert(p).second) continue;
        out.push_back(p);
        try {
            canonicalize(out);
        } catch (const Error&) {
            out.pop_back();
        }
    }
    REQUIRE((int)out.size() == n);
    return out;
}

const std::vector<Point> kS4 = {{1, 0}, {4, 3}, {0, 5}, {-3, 2}};

// nested bottom-right staircase sets (hand-constructed, strictly convex,
// already in canonical anticlockwise-from-topmost order)
const std::vector<Point> kStair12 = {{0, 20}, {-1, 19}, {1, 10}, {4, 4},   {7, 0},  {13, -4},
                                     {20, -1}, {19, 4},  {17, 9}, {14, 14}, {9, 18}, {5, 19}};
const std::vector<Point> kStair13 = {{0, 20},  {-1, 19}, {1, 10}, {4, 4},   {7, 0},  {13, -4}, {18, -6},
                                     {20, -1}, {19, 4},  {17, 9}, {14, 14}, {9, 18}, {5, 19}};
const std::vector<Point> kStair16 = {{0, 19},  {-1, 18},  {1, 10},  {4, 4},   {7, 0},   {13, -4},
                                     {20, -7}, {28, -10}, {36, -12}, {42, -8}, {41, -4}, {39, 1},
                                     {36, 5},  {27, 9},   {17, 13},  {6, 17}};

}  // namespace

TEST_CASE("kS4: single cut sees everything") {
    ConvexInput ci;
    HistogramPartition hp = run(kS4, &ci);
    REQUIRE(hp.cuts.size() == 1);
    CHECK(hp.cuts[0].vertical);
    CHECK(hp.cuts[0].from == Point{0, 5});
    CHECK(hp.cuts[0].to == Point{0, 0});
    CHECK(hp.termination == Termination::DegenerateK1);
    // canonical order is (0,5),(-3,2),(1,0),(4,3)
    CHECK(hp.assignment == std::vector<int>{0, 0, 1, 1});
    // set definitions overlap on the cut line: the topmost point is in both
    CHECK(hist_sees(hp, 0, {0, 5}));
    CHECK(hist_sees(hp, 1, {0, 5}));
    CHECK(hist_sees(hp, 0, {-3, 2}));
    CHECK_FALSE(hist_sees(hp, 0, {1, 0}));
    CHECK(hist_sees(hp, 1, {1, 0}));
    CHECK(hist_sees(hp, 1, {4, 3}));
    CHECK(hist_base_cut(0) == 1);
    CHECK(hist_base_cut(1) == 1);
    CHECK(hist_base_cut(5) == 5);
}

TEST_CASE("12-point staircase: k=3, Type1") {
    HistogramPartition hp = run(kStair12);
    REQUIRE(hp.cuts.size() == 3);
    CHECK(hp.cuts[0].from == Point{0, 20});
    CHECK(hp.cuts[0].to == Point{0, 10});
    CHECK(hp.cuts[1].to == Point{17, 10});
    CHECK(hp.cuts[2].to == Point{17, -4});
    CHECK(hp.termination == Termination::Type1);  // x(b)=13 inside [0,17]
    CHECK(hp.assignment == std::vector<int>{0, 0, 1, 2, 2, 2, 3, 3, 2, 1, 1, 1});
}

TEST_CASE("13-point staircase: k=3, Type2 (bottommost beyond the horizontal cut)") {
    HistogramPartition hp = run(kStair13);
    REQUIRE(hp.cuts.size() == 3);
    CHECK(hp.cuts[1].to == Point{17, 10});
    CHECK(hp.cuts[2].to == Point{17, -6});
    CHECK(hp.termination == Termination::Type2);  // x(b)=18 outside [0,17]
    CHECK(hp.assignment == std::vector<int>{0, 0, 1, 2, 2, 2, 3, 3, 3, 2, 1, 1, 1});
}

TEST_CASE("16-point double staircase: k=4, Type3") {
    HistogramPartition hp = run(kStair16);
    REQUIRE(hp.cuts.size() == 4);
    CHECK(hp.cuts[0].to == Point{0, 10});
    CHECK(hp.cuts[1].to == Point{27, 10});
    CHECK(hp.cuts[2].to == Point{27, -10});
    CHECK(hp.cuts[3].to == Point{42, -10});
    CHECK(hp.termination == Termination::Type3);  // y(r)=-8 inside [-10,10]
    CHECK(hp.assignment == std::vector<int>{0, 0, 1, 2, 2, 2, 2, 3, 4, 3, 3, 3, 3, 2, 1, 1});
    // ties on a base line go to the earliest cut: (27,9) projects onto the
    // very endpoint q2=(27,10) of L2 and is also inside L3's set
    CHECK(hist_sees(hp, 2, {27, 9}));
    CHECK(hist_sees(hp, 3, {27, 9}));
    CHECK(hp.assignment[13] == 2);
}

TEST_CASE("16-point double staircase, low rightmost: k=4, Type4") {
    std::vector<Point> pts = kStair16;
    pts[9] = {42, -11};  // rightmost drops below the last vertical cut
    HistogramPartition hp = run(pts);
    REQUIRE(hp.cuts.size() == 4);
    CHECK(hp.termination == Termination::Type4);  // y(r)=-11 outside [-10,10]
    CHECK(hp.assignment == std::vector<int>{0, 0, 1, 2, 2, 2, 2, 3, 4, 4, 3, 3, 3, 2, 1, 1});
}

TEST_CASE("concave staircase input is mirrored and needs two cuts") {
    // canonicalize reflects this set (topmost is right of bottommost)
    std::vector<Point> pts = {{1, 1}, {2, 5}, {3, 8}, {4, 10}, {5, 11}};
    ConvexInput ci;
    HistogramPartition hp = run(pts, &ci);
    CHECK(ci.mirrored);
    REQUIRE(hp.cuts.size() == 2);
    CHECK(hp.termination == Termination::DegenerateK2);
}

TEST_CASE("triangle goes through the mirror path and one cut suffices") {
    ConvexInput ci;
    HistogramPartition hp = run({{0, 2}, {-1, 0}, {3, 1}}, &ci);
    CHECK(ci.mirrored);
    REQUIRE(hp.cuts.size() == 1);
    CHECK(hp.termination == Termination::DegenerateK1);
    CHECK(hp.assignment == std::vector<int>{0, 1, 1});
}

TEST_CASE("classification rules in isolation") {
    ConvexInput ci = canonicalize(kS4);  // b=(1,0), r=(4,3)
    HistogramPartition hp;
    auto vcut = [](int i, Point f, Point t) { return CutSegment{i, true, f, t}; };
    auto hcut = [](int i, Point f, Point t) { return CutSegment{i, false, f, t}; };

    hp.cuts = {vcut(1, {0, 5}, {0, 0})};
    CHECK(classify_termination(hp, ci) == Termination::DegenerateK1);
    hp.cuts.push_back(hcut(2, {0, 0}, {4, 0}));
    CHECK(classify_termination(hp, ci) == Termination::DegenerateK2);

    // k=3: last vertical, horizontal predecessor from (0,0) to (2,0):
    // x(b)=1 lies inside even though it equals no endpoint
    hp.cuts = {vcut(1, {0, 5}, {0, 0}), hcut(2, {0, 0}, {2, 0}), vcut(3, {2, 0}, {2, -1})};
    CHECK(classify_termination(hp, ci) == Termination::Type1);
    hp.cuts[1].to = {1, 0};  // x(b)=1 exactly at the endpoint still counts
    hp.cuts[2] = vcut(3, {1, 0}, {1, -1});
    CHECK(classify_termination(hp, ci) == Termination::Type1);
    hp.cuts[1].to = {0, 0};  // degenerate narrow predecessor: b outside
    hp.cuts[1].from = {-1, 0};
    hp.cuts[2] = vcut(3, {0, 0}, {0, -1});
    CHECK(classify_termination(hp, ci) == Termination::Type2);

    // k=4: last horizontal, vertical predecessor from (2,5) to (2,2):
    // y(r)=3 inside; then shrink the band so it falls outside
    hp.cuts = {vcut(1, {0, 5}, {0, 4}), hcut(2, {0, 4}, {2, 4}), vcut(3, {2, 4}, {2, 2}),
               hcut(4, {2, 2}, {4, 2})};
    CHECK(classify_termination(hp, ci) == Termination::Type3);
    hp.cuts[2] = vcut(3, {2, 4}, {2, 3});  // y(r)=3 at the endpoint: still Type3
    hp.cuts[3] = hcut(4, {2, 3}, {4, 3});
    CHECK(classify_termination(hp, ci) == Termination::Type3);
    hp.cuts[2] = vcut(3, {2, 5}, {2, 4});
    hp.cuts[3] = hcut(4, {2, 4}, {4, 4});
    CHECK(classify_termination(hp, ci) == Termination::Type4);

    hp.cuts.clear();
    CHECK_THROWS_AS((void)classify_termination(hp, ci), Error);
}

TEST_CASE("random convex sets satisfy every partition invariant") {
    for (unsigned seed = 1; seed <= 15; ++seed) {
        int n = 3 + (int)(seed * 7 % 78);
        CAPTURE(seed);
        CAPTURE(n);
        run(circle_set(n, seed, 1000));
        // small radius: collinear-adjacent corners and degenerate runs
        run(circle_set(std::min(n, 12), seed + 100, 40));
    }
}

TEST_CASE("walk cost stays linear on large inputs") {
    std::vector<Point> pts = circle_set(400, 7, 100000);
    ConvexInput ci = canonicalize(pts);
    OrthoPolygon ocp = build_ocp(ci);
    HistogramPartition hp = partition(ocp, ci);
    CHECK(hp.walk_steps <= 8 * (long)(400 + hp.cuts.size()) + 16);
}
