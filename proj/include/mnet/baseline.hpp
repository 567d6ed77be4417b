#pragma once

#include <vector>

#include "mnet/geometry.hpp"
#include "mnet/network.hpp"

namespace mnet {

/// Classical divide-and-conquer Manhattan network for a general point set
/// (no convexity required): split at the median x-coordinate, project every
/// point of the slice horizontally onto the vertical median line, join
/// coordinate-consecutive projections along the line, and recurse on the two
/// halves. Produces Theta(n log n) vertices and edges; the output is exact
/// (graph distance == l1 distance for every input pair) but in general not
/// planar. Ids follow the Network convention: inputs first in input order,
/// then Steiner vertices in creation order.
Network build_baseline(const std::vector<Point>& points);

}  // namespace mnet
