#pragma once

#include <vector>

#include "mnet/geometry.hpp"
#include "mnet/ortho_polygon.hpp"

namespace mnet {

/// One maximal alternating cut of the histogram partition. Odd cuts are
/// vertical (drawn downward), even cuts horizontal (drawn rightward).
struct CutSegment {
    int index = 0;  ///< 1-based cut number
    bool vertical = false;
    Point from;  ///< q_{i-1} (the topmost point for the first cut)
    Point to;    ///< q_i, on the polygon boundary
};

enum class Termination {
    Type1,         ///< last cut vertical, previous horizontal cut sees the bottommost point
    Type2,         ///< last cut vertical, it does not
    Type3,         ///< last cut horizontal, previous vertical cut sees the rightmost point
    Type4,         ///< last cut horizontal, it does not
    DegenerateK1,  ///< single cut; the type rule needs a previous cut
    DegenerateK2,  ///< two cuts; routed through the generic path with no deletions
};

/// Histogram ids: 0 = left histogram of cut 1, 1 = right histogram of cut 1,
/// i >= 2 = the single histogram based by cut i (below for horizontal cuts,
/// right for vertical ones).
struct HistogramPartition {
    std::vector<CutSegment> cuts;  ///< L_1..L_k
    std::vector<int> assignment;   ///< canonical point index -> histogram id (first cut wins)
    Termination termination = Termination::DegenerateK1;
    long walk_steps = 0;  ///< instrumented boundary-walk step counter
};

/// Membership of p in the histogram's defining point set (closed inequalities).
bool hist_sees(const HistogramPartition& hp, int hist_id, Point p);

/// Cut number (1-based) whose segment is the base of the given histogram.
int hist_base_cut(int hist_id);

/// Re-derive the termination type from the final cuts and the extreme points.
Termination classify_termination(const HistogramPartition& hp, const ConvexInput& ci);

/// Run the alternating-cut process until every input point is seen.
HistogramPartition partition(const OrthoPolygon& ocp, const ConvexInput& ci);

}  // namespace mnet
