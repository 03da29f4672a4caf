#pragma once

#include <cstdint>
#include <vector>

#include "elastica/system.hpp"

namespace elastica {

enum class CellLabel : std::uint8_t { Outside = 0, Inside = 1, Boundary = 2 };

// Rasterized in/out/boundary labeling of the enclosed set. Boundary cells
// are those whose center lies within one cell diagonal of some curve;
// inside cells have odd total winding parity at their center.
struct ReconstructionGrid {
    Vec2 lo = Vec2(0, 0);
    Vec2 hi = Vec2(0, 0);
    int nx = 0;
    int ny = 0;
    std::vector<CellLabel> labels; // row-major, y fastest growing by row

    CellLabel at(int ix, int iy) const {
        return labels[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                      static_cast<std::size_t>(ix)];
    }
    Vec2 cell_center(int ix, int iy) const {
        return Vec2(lo.x() + (hi.x() - lo.x()) * (ix + 0.5) / nx,
                    lo.y() + (hi.y() - lo.y()) * (iy + 0.5) / ny);
    }
    double cell_area() const {
        return (hi.x() - lo.x()) / nx * ((hi.y() - lo.y()) / ny);
    }
    std::size_t count(CellLabel l) const;
};

// Exact winding number by signed ray crossings (+x ray, half-open vertex
// rule). Rejects points within the geometric tolerance of the curve.
int winding_number(const DiscreteCurve& curve, const Vec2& point);

// Same value via summed signed angles; used as a cross-check.
int winding_number_by_angle(const DiscreteCurve& curve, const Vec2& point);

// True iff |sum_i weight_i * winding_i(point)| is odd.
bool parity_inside(const CurveSystem& system, const Vec2& point);

ReconstructionGrid reconstruct_set(const CurveSystem& system, const Vec2& lo,
                                   const Vec2& hi, int nx, int ny, int threads = 1);

// Area of the labeled set: inside cells plus half of the boundary band.
double estimated_area(const ReconstructionGrid& grid);

// Samples (each within tol of the support) where the multiplicity is odd;
// the discrete proxy for the reduced boundary.
std::vector<Vec2> odd_multiplicity_field(const CurveSystem& system,
                                         const std::vector<Vec2>& samples, double tol);

} // namespace elastica
