#pragma once

#include <vector>

#include "elastica/system.hpp"

namespace elastica {

// One edge of the intersection graph. Closed loops that never meet a
// junction have a = b = -1 and a chain whose last point implicitly
// reconnects to the first.
struct GraphEdge {
    int a = -1;
    int b = -1;
    std::vector<Vec2> chain; // endpoints at the vertex positions for a,b >= 0
    int multiplicity = 1;
    Vec2 tangent_a = Vec2(0, 0); // unit, pointing away from the vertex
    Vec2 tangent_b = Vec2(0, 0);
};

struct PlanarGraph {
    std::vector<Vec2> vertices;
    std::vector<GraphEdge> edges;
};

struct DirectionEntry {
    Vec2 w = Vec2(0, 0); // unit representative, modulo sign
    int rho_plus = 0;    // multiplicity of ends with tangent . w > 0
    int rho_minus = 0;
};

struct VertexDirectionalReport {
    Vec2 vertex = Vec2(0, 0);
    std::vector<DirectionEntry> directions;
    int local_density = 0; // sum of incident end multiplicities
};

struct RegularityOffense {
    int vertex = -1;
    Vec2 direction = Vec2(0, 0);
    int rho_plus = 0;
    int rho_minus = 0;
};

struct RegularityReport {
    bool regular = true;
    std::vector<RegularityOffense> offenses;
    // An unbalanced direction rules out closed C^1 immersions with this
    // support, which forces the relaxed energy to be infinite.
    bool infinite_relaxed_energy = false;
};

struct CuspReport {
    bool applicable = false; // false when the graph is not regular
    std::vector<int> cusp_vertices; // odd local density in the halved graph
    bool parity_even = false;
};

constexpr double kThetaCorner = 0.2;      // rad
constexpr double kSnapTolRel = 1e-6;      // x bbox diagonal
constexpr double kAngularTol = 0.01;      // rad, direction clustering

// Nodes whose turning angle exceeds theta_corner by clearly more than the
// surrounding curvature explains over the node's dual length (separating
// genuine corners from discretization spikes of smooth curves).
std::vector<std::size_t> detect_corners(const DiscreteCurve& curve,
                                        double theta_corner = kThetaCorner);

// Intersection graph of the system: junctions from crossings, corners and
// coincident runs; coincident chains merged with summed multiplicity;
// pass-through points dissolved. snap_tol <= 0 selects the default
// 1e-6 x bounding-box diagonal.
PlanarGraph extract_graph(const CurveSystem& system, double snap_tol = 0.0);

VertexDirectionalReport directional_densities(const PlanarGraph& graph, int vertex,
                                              double angular_tol = kAngularTol);

RegularityReport is_regular(const PlanarGraph& graph, double angular_tol = kAngularTol);

// Halve multiplicities (even m -> m/2, odd m -> (m-1)/2, drop zeros) and
// report the vertices of odd local density: the predicted cusps. Their
// count must be even on a regular graph. The optional marking overrides
// which edges count as odd (defaults to the parity of the multiplicity).
CuspReport cusp_parity_check(const PlanarGraph& graph, double angular_tol = kAngularTol);
CuspReport cusp_parity_check(const PlanarGraph& graph,
                             const std::vector<bool>& edge_odd, double angular_tol);

} // namespace elastica
