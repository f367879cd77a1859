#pragma once

#include <vector>

#include <erogers/certificate.hpp>
#include <erogers/hypergraph.hpp>

namespace erogers {

using Point = std::vector<int>;

// Integer points with all coordinates >= 1 on the sphere of radius r in Z^d.
struct SpherePointSet {
    int d = 0;
    int r = 0;
    std::vector<Point> points; // sorted lexicographically
};

SpherePointSet sphere_points(int d, int r);

// R-partite, R-uniform hypergraph whose edges are the progressions
// x, x+a, ..., x+(R-1)a with x in [r]^d and a a sphere point. Vertex x+ia
// lies in part X_{i+1} = [(i+1)r]^d; vertices are numbered part by part.
struct EFRInstance {
    int d = 0;
    int r = 0;
    int R = 0;
    SpherePointSet directions;
    std::vector<long long> part_sizes;   // |X_i| = (i r)^d, i = 1..R
    std::vector<long long> part_offsets; // first vertex id of each part
    long long declared_order = 0;        // sum of part sizes
    Hypergraph hypergraph;

    // Part index (1-based) and point of a dense vertex id.
    std::pair<int, Point> vertex_label(int v) const;
    int vertex_id(int part, const Point & p) const;
};

EFRInstance efr_hypergraph(int d, int r, int R);

// Audits the three guarantees: the edge-count bound against declared N,
// linearity and triangle-freeness (the latter two exhaustively).
Certificate efr_certificate(const EFRInstance & inst);
// Same audits for an arbitrary R-uniform hypergraph with a given N.
Certificate efr_certificate(const Hypergraph & h, int R, long long declared_order);

struct EFRParameters {
    int d = 0;
    long long r = 0;
};

// d = floor(sqrt(log_R N)), r = R^d.
EFRParameters choose_efr_parameters(double N, int R);

} // namespace erogers
