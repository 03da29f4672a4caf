#pragma once

#include <cstdint>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/system.hpp"

namespace elastica {

DiscreteCurve make_circle(double r, std::size_t n, const Vec2& center = Vec2(0, 0),
                          bool ccw = true, int weight = 1);

// Uniform-parameter sampling, so nodes cluster near the ends of the major axis.
DiscreteCurve make_ellipse(double a, double b, std::size_t n);

// Square of side s centered at the origin, counterclockwise, n divisible by 4.
DiscreteCurve make_square(double s, std::size_t n);

// Axis-aligned square [lo, hi]^2 with circular arcs of radius rho at the
// corners; counterclockwise.
DiscreteCurve make_rounded_square(const Vec2& lo, const Vec2& hi, double rho,
                                  std::size_t n);

// Bernoulli lemniscate with lobes of unit half-width, one transversal
// self-crossing at the origin. Includes a node exactly at the origin.
DiscreteCurve make_figure_eight(std::size_t n);

// The same support split into two closed lobes through the origin.
CurveSystem make_figure_eight_lobes(std::size_t n);

// Teardrop loop attached at `tip`, body extending along unit direction u,
// leaving the tip along +u and returning along -u. Open chain from tip to
// tip with n interior samples (tip excluded).
std::vector<Vec2> petal_points(const Vec2& tip, const Vec2& u, double scale,
                               std::size_t n);

// Two petals at (1,0) and (-1,0) joined by the doubly-traversed segment
// between them; cusps at both tips.
DiscreteCurve make_two_cusp_drops(std::size_t n);

// Cross-and-drops system: four petals at (+-1,0),(0,+-1), horizontal
// curve (right petal, axis, left petal, axis) plus its 90-degree rotation.
CurveSystem make_figbm(std::size_t n);

// Three drops based at the origin whose six end tangents are
// e^{-i t}, e^{-2i t}, e^{i(-pi+t)}, e^{i(-pi+2t)}, e^{i f}, e^{i(pi-f)}
// with sin f = sin t + sin 2t, so the tangent vectors sum to zero.
CurveSystem make_three_drop_junction(double theta, std::size_t n);

// Star-shaped curve r(a) = r0 * (1 + sum_k amp_k cos(k a + phase_k)).
DiscreteCurve make_star_curve(double r0, const std::vector<double>& amp,
                              const std::vector<double>& phase, std::size_t n);

// Deterministic pseudo-random generators for property tests.
struct CurveRng {
    std::uint64_t state;
    explicit CurveRng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    double uniform(double lo, double hi);
};

// Random smooth convex curve (small harmonic perturbation of a circle).
DiscreteCurve random_convex_curve(CurveRng& rng, std::size_t n);

// Random star-shaped curve, valid but generally non-convex.
DiscreteCurve random_star_curve(CurveRng& rng, std::size_t n);

} // namespace elastica
