#pragma once

#include <functional>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/types.hpp"

namespace elastica {

// Weighted family of closed curves; the discrete stand-in for the integer
// rectifiable varifold sum_i (gamma_i)_#(v(S^1, 1)).
struct CurveSystem {
    std::vector<DiscreteCurve> curves;
};

std::string validate(const CurveSystem& system);
void require_valid(const CurveSystem& system);

double system_bbox_diagonal(const CurveSystem& system);
double system_diameter(const CurveSystem& system);

struct EnergyReport {
    double mass = 0.0;    // mu_V(R^2)
    double elastic = 0.0; // E_p(V)
    double total = 0.0;   // lambda * mass + elastic
    std::vector<std::pair<double, double>> per_curve; // (length, E_p), unweighted
    std::vector<Verdict> checks;
};

struct MonotonicityProfile {
    Vec2 center = Vec2(0, 0);
    std::vector<double> radii;
    std::vector<double> values;
    double limit_estimate = 0.0; // (mass + E_2)/2
    bool monotone = true;
    std::size_t violation_index = 0; // first offending pair (i, i+1) when !monotone
};

// Smooth compactly supported test field with analytic Jacobian.
struct VectorField {
    std::function<Vec2(const Vec2&)> value;
    std::function<Mat2(const Vec2&)> jacobian;
};

double mass(const CurveSystem& system);

// Weighted E_p over the family, plus the Holder-chain verdicts.
EnergyReport system_energy(const CurveSystem& system, double p, double lambda = 1.0);

// lambda * (clipped length inside the ball) + bending terms of nodes inside
// the closed ball, weighted. Used to localize F_p to a region of interest.
double energy_in_ball(const CurveSystem& system, const Vec2& center, double r,
                      double p, double lambda);

// Number of curve passes (weighted) within distance tol of the point.
// Near edges are clustered along each curve; one cluster = one pass.
int multiplicity_at(const CurveSystem& system, const Vec2& point, double tol);

std::vector<Verdict> density_bound_check(const CurveSystem& system, double p,
                                         const std::vector<Vec2>& sample_points);

// 2 <= E_1(V) <= mass^{1/p'} E_p(V)^{1/p}; returns both verdicts.
std::vector<Verdict> holder_chain_check(const CurveSystem& system, double p);

// Max over fields of |int div_T X dmu + int <X, k> dmu|, both integrals by
// quadrature (edge midpoints for the divergence, node turning vectors for
// the curvature term). Near zero certifies a vanishing discrete boundary.
double first_variation_residual(const CurveSystem& system,
                                const std::vector<VectorField>& fields);

// p=2 monotone quantity A(r); radii strictly increasing and positive.
MonotonicityProfile monotonicity_profile(const CurveSystem& system, const Vec2& center,
                                         const std::vector<double>& radii,
                                         double p_check = 2.0);

// Tolerance for the nondecreasing check: 1e-3 * (mass + E_2).
double monotonicity_tolerance(const CurveSystem& system);

// Test fields. `radial_bump_field` is X(x) = x * w(|x|^2/R^2) with a C^inf
// bump w supported in |x| < R.
VectorField radial_bump_field(double R);
VectorField polynomial_bump_field(const Vec2& center, double R,
                                  const std::vector<double>& coeffs_x,
                                  const std::vector<double>& coeffs_y);

} // namespace elastica
