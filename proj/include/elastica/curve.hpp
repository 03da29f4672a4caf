#pragma once

#include <cstddef>
#include <vector>

#include "elastica/types.hpp"

namespace elastica {

// Closed polyline with integer multiplicity. Node i connects to node i+1,
// the last node connects back to the first.
struct DiscreteCurve {
    std::vector<Vec2> nodes;
    int weight = 1;

    std::size_t size() const { return nodes.size(); }
    const Vec2& node(std::ptrdiff_t i) const {
        std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
        return nodes[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    // Edge i runs from node i to node i+1.
    Vec2 edge(std::ptrdiff_t i) const { return node(i + 1) - node(i); }
};

// Signed curvature kappa_i = phi_i / ell_i at each node, with the dual
// length ell_i = (|e_{i-1}| + |e_i|)/2.
struct CurvatureProfile {
    std::vector<double> curvature;   // 1/length
    std::vector<double> dual_length; // length
};

struct TurningNumber {
    int index = 0;
    double residual = 0.0; // |sum(phi)/2pi - index|
    bool reliable = true;  // residual <= 0.1
};

constexpr double kEpsAng = 1e-6;               // rad, reversal guard
constexpr double kEpsGeomRel = 1e-9;           // x bbox diagonal, edge-length floor
constexpr double kTurningResidualLimit = 0.1;

double bbox_diagonal(const DiscreteCurve& curve);

// Empty string when the curve satisfies all invariants, else a diagnostic.
std::string validate(const DiscreteCurve& curve);
void require_valid(const DiscreteCurve& curve);

// Signed turning angle at each node (angle from edge i-1 to edge i,
// counterclockwise positive).
std::vector<double> turning_angles(const DiscreteCurve& curve);

CurvatureProfile curvature_profile(const DiscreteCurve& curve);

double length(const DiscreteCurve& curve);

// Sum_i |phi_i|^p / ell_i^{p-1}. With delta > 0 the |phi|^p factor is the
// smoothed surrogate (phi^2 + delta^2)^{p/2} - delta^p.
double elastic_energy(const DiscreteCurve& curve, double p, double delta = 0.0);

double total_energy(const DiscreteCurve& curve, double p, double lambda = 1.0,
                    double delta = 0.0);

// Sum_i |phi_i|; >= 2pi for any valid closed polyline.
double total_absolute_curvature(const DiscreteCurve& curve);

TurningNumber turning_number(const DiscreteCurve& curve);

// n nodes at equal arclength spacing along the input polyline.
DiscreteCurve resample_arclength(const DiscreteCurve& curve, std::size_t n);

// Energy of the sub-chain of nodes i0..i1 (inclusive, cyclic indices):
// lambda * (edge lengths between them) + bending terms at the interior
// nodes and at both ends. Used to price connection arcs.
double chain_energy(const DiscreteCurve& curve, std::size_t i0, std::size_t i1,
                    double p, double lambda, double delta = 0.0);

} // namespace elastica
