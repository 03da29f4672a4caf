#pragma once

#include <vector>

#include "elastica/system.hpp"

namespace elastica {

// Per-curve, per-node freeze masks. An empty mask means every node is free.
struct ConstraintSet {
    std::vector<std::vector<bool>> frozen;

    static ConstraintSet all_free(const CurveSystem& system);
    // Nodes outside the disc are frozen, nodes inside stay free.
    static ConstraintSet freeze_outside_disc(const CurveSystem& system,
                                             const Vec2& center, double r);
    static ConstraintSet freeze_outside_rect(const CurveSystem& system,
                                             const Vec2& lo, const Vec2& hi);

    bool is_frozen(std::size_t ci, std::size_t ni) const {
        if (frozen.empty()) return false;
        return frozen[ci][ni];
    }
};

struct SolveOptions {
    double p = 2.0;
    double lambda = 1.0;
    int max_iters = 10000;
    double grad_tol = 1e-8;
    double armijo_c = 1e-4;
    double initial_step = 0.0; // <= 0 picks a scale-aware default
    int redistribute_every = 50;
    double delta = 1e-6; // angle smoothing, applied when p < 2
    // Optional extra acceptance test (e.g. containment); candidates failing
    // it are rejected by the line search.
    std::function<bool(const CurveSystem&)> feasible;
};

struct TraceRow {
    int iter;
    double energy;
    double grad_norm; // masked infinity norm
    double step;
};

struct SolveResult {
    CurveSystem system;
    EnergyReport report;
    std::vector<TraceRow> trace;
    int iterations = 0; // accepted steps
    bool converged = false;
    bool warn_line_search = false;
};

// Analytic gradient of sum_curves w * (lambda * L + E_p) in the node
// positions. delta > 0 switches |phi|^p to the smoothed surrogate, matching
// elastic_energy(curve, p, delta).
std::vector<std::vector<Vec2>> discrete_gradient(const CurveSystem& system, double p,
                                                 double lambda, double delta = 0.0);

// Gradient descent with Armijo backtracking over the free nodes. Frozen
// nodes are bit-identical between input and output.
SolveResult minimize(const CurveSystem& system, const ConstraintSet& constraints,
                     const SolveOptions& options);

} // namespace elastica
