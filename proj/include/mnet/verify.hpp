#pragma once

#include <string>
#include <vector>

#include "mnet/geometry.hpp"
#include "mnet/network.hpp"

namespace mnet {

/// Exact nonnegative fraction with 128-bit terms (squared graph distances can
/// exceed 64 bits on badly broken networks). Stored reduced.
struct StretchSq {
    unsigned __int128 num = 0;
    unsigned __int128 den = 1;

    /// num/den <= bound, compared exactly by cross-multiplication.
    bool at_most(unsigned __int128 bound) const { return num <= bound * den; }
    friend bool operator==(const StretchSq&, const StretchSq&) = default;
    std::string str() const;  ///< "num/den" in decimal
};

struct ViolatingPair {
    int a = 0;             ///< indices into the terminal list S
    int b = 0;
    Coord found = -1;      ///< graph distance, -1 when unreachable
    Coord required = 0;    ///< l1 distance
    friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct ManhattanReport {
    bool ok = false;
    long long pairs_checked = 0;
    std::vector<ViolatingPair> violations;  ///< every violating pair, in (a, b) order
    friend bool operator==(const ManhattanReport&, const ManhattanReport&) = default;
};

/// Combinatorial embedding: for each vertex the cyclic order of its
/// neighbors. Faces arise by tracing: the directed edge (u, v) continues to
/// (v, w) where w follows u in the rotation at v.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    int face_count = 0;  ///< traced face orbits
};

struct PlanarityReport {
    bool planar = false;
    bool euler_ok = false;  ///< certificate verdict for the emitted embedding
    Embedding embedding;    ///< populated when planar
    int components = 0;
    friend bool operator==(const PlanarityReport& x, const PlanarityReport& y) {
        return x.planar == y.planar && x.euler_ok == y.euler_ok &&
               x.embedding.face_count == y.embedding.face_count && x.components == y.components;
    }
};

struct SizeReport {
    long long v_count = 0;
    long long e_count = 0;
    bool size_ok = false;  ///< v_count <= 4n and e_count <= 5n
    friend bool operator==(const SizeReport&, const SizeReport&) = default;
};

struct VerificationReport {
    ManhattanReport manhattan;
    PlanarityReport planarity;
    SizeReport size;
    StretchSq max_stretch_sq;
    double manhattan_ms = 0, planarity_ms = 0, stretch_ms = 0;

    bool all_ok() const {
        return manhattan.ok && planarity.planar && planarity.euler_ok && size.size_ok &&
               max_stretch_sq.at_most(2);
    }
};

/// Shortest-path distances from source vertex `src` over the network's
/// l1-weighted edges (-1 for unreachable vertices).
std::vector<Coord> network_distances(const Network& net, int src);

/// Checks graph distance == l1 distance for every pair of S with zero
/// tolerance. Sources run in parallel when OpenMP is enabled; the report is
/// deterministic either way. Throws PointNotInNetwork when a point of S has
/// no vertex.
ManhattanReport check_manhattan(const Network& net, const std::vector<Point>& S);

/// Single-threaded reference implementation with identical output.
ManhattanReport check_manhattan_serial(const Network& net, const std::vector<Point>& S);

/// Abstract planarity of the network's graph (geometry ignored). On planar
/// graphs the returned embedding passed the Euler face-trace certificate
/// (euler_ok). Non-planar verdicts carry no witness.
PlanarityReport check_planarity(const Network& net);

/// Independent certificate: traces every face orbit of the rotation system
/// and checks the Euler relation V - E + F = 2C (each component contributes
/// its own outer orbit; an isolated vertex counts as one face), which holds
/// iff the rotation system is a genus-0 (planar) embedding. Throws
/// MalformedRotation when the rotation does not cover exactly the network's
/// edge set.
bool euler_certificate(const Network& net, const Embedding& emb);

/// Max over distinct pairs of S of W_G(p,q)^2 / (dx^2 + dy^2), exact.
/// For a network that passed check_manhattan this is at most 2, with
/// equality exactly on 45-degree pairs. Throws PointNotInNetwork.
StretchSq max_stretch_sq(const Network& net, const std::vector<Point>& S);

/// 4n/5n size-bound report (the vertex half always holds for build_network
/// outputs; the edge half holds on staircase-shaped inputs and fails on
/// dense circular arcs, which need up to 6n edges).
SizeReport check_size(const Network& net);

/// Runs all checks and assembles the full report with timings.
VerificationReport verify_network(const Network& net, const std::vector<Point>& S);

}  // namespace mnet
