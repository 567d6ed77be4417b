#include "mnet/baseline.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mnet {

namespace {

std::uint64_t point_key(Point p) {
    auto lo = static_cast<std::uint32_t>(static_cast<std::int32_t>(p.y));
    auto hi = static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(p.x)));
    return (hi << 32) | lo;
}

class BaselineBuilder {
  public:
    explicit BaselineBuilder(const std::vector<Point>& pts) : pts_(pts) {}

    Network run() {
        const int n = static_cast<int>(pts_.size());
        verts_.reserve(pts_.size());
        for (int i = 0; i < n; ++i) {
            verts_.push_back({pts_[i], PointClass::Original});
            if (!id_of_.emplace(point_key(pts_[i]), i).second)
                throw Error(Errc::DuplicatePoint, "duplicate input point");
        }
        std::vector<int> order(pts_.size());
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(pts_[a].x, pts_[a].y) < std::pair(pts_[b].x, pts_[b].y);
        });
        split(order, 0, n);

        Network net;
        net.n_original = n;
        net.vertices = std::move(verts_);
        net.edges.assign(edge_set_.begin(), edge_set_.end());
        return net;
    }

  private:
    int ensure_vertex(Point p) {
        auto [it, fresh] = id_of_.try_emplace(point_key(p), static_cast<int>(verts_.size()));
        if (fresh) verts_.push_back({p, PointClass::Steiner});
        return it->second;
    }

    void add_edge(int u, int v) {
        if (u != v) edge_set_.insert({std::min(u, v), std::max(u, v)});
    }

    // Processes the x-sorted slice order[lo, hi): draws the vertical line at
    // the lower-median x, projects every point of the slice onto it, chains
    // the projections, and recurses on the points strictly left and strictly
    // right of the line. Points on the line are finished at this level: the
    // line joins them to every projection at exact l1 distance.
    void split(const std::vector<int>& order, int lo, int hi) {
        if (hi - lo <= 1) return;
        const Coord m = pts_[order[lo + (hi - lo - 1) / 2]].x;

        std::vector<std::pair<Coord, int>> feet;  // (y, vertex id) on the line
        feet.reserve(static_cast<std::size_t>(hi - lo));
        for (int i = lo; i < hi; ++i) {
            const Point p = pts_[order[i]];
            const Point foot{m, p.y};
            const int fid = ensure_vertex(foot);
            if (foot != p) add_edge(id_of_.at(point_key(p)), fid);
            feet.emplace_back(p.y, fid);
        }
        std::sort(feet.begin(), feet.end());
        for (std::size_t i = 1; i < feet.size(); ++i)
            if (feet[i - 1].second != feet[i].second) add_edge(feet[i - 1].second, feet[i].second);

        const auto begin = order.begin() + lo, end = order.begin() + hi;
        const auto lsplit = std::partition_point(begin, end, [&](int a) { return pts_[a].x < m; });
        const auto rsplit = std::partition_point(lsplit, end, [&](int a) { return pts_[a].x == m; });
        split(order, lo, static_cast<int>(lsplit - order.begin()));
        split(order, static_cast<int>(rsplit - order.begin()), hi);
    }

    const std::vector<Point>& pts_;
    std::vector<NetVertex> verts_;
    std::unordered_map<std::uint64_t, int> id_of_;
    std::set<std::array<int, 2>> edge_set_;
};

}  // namespace

Network build_baseline(const std::vector<Point>& points) {
    if (points.empty()) throw Error(Errc::BadParams, "empty point set");
    for (const Point& p : points)
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
            throw Error(Errc::CoordinateOutOfRange, "input coordinate out of range");
    BaselineBuilder builder(points);
    return builder.run();
}

}  // namespace mnet
