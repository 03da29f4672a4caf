#include "elastica/winding.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "elastica/geom.hpp"

namespace elastica {

namespace {

double distance_to_curve(const DiscreteCurve& c, const Vec2& p) {
    double best = 1e300;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
    for (std::ptrdiff_t i = 0; i < n; ++i)
        best = std::min(best, dist_point_segment(p, c.node(i), c.node(i + 1)));
    return best;
}

void require_off_curve(const DiscreteCurve& c, const Vec2& p) {
    const double eps = kEpsGeomRel * bbox_diagonal(c);
    if (distance_to_curve(c, p) <= eps)
        throw InputError("query point lies on the curve; use multiplicity/boundary logic");
}

// Signed crossings of edge a->b with the +x ray from p. The half-open rule
// (a.y <= p.y < b.y for upward) acts as a symbolic perturbation when the
// ray passes through a vertex.
int edge_crossing(const Vec2& a, const Vec2& b, const Vec2& p) {
    if (a.y() <= p.y() && p.y() < b.y()) {
        if (cross2(b - a, p - a) > 0.0) return 1;
    } else if (b.y() <= p.y() && p.y() < a.y()) {
        if (cross2(b - a, p - a) < 0.0) return -1;
    }
    return 0;
}

int winding_raw(const DiscreteCurve& c, const Vec2& p) {
    int w = 0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
    for (std::ptrdiff_t i = 0; i < n; ++i)
        w += edge_crossing(c.node(i), c.node(i + 1), p);
    return w;
}

} // namespace

int winding_number(const DiscreteCurve& curve, const Vec2& point) {
    require_valid(curve);
    require_off_curve(curve, point);
    return winding_raw(curve, point);
}

int winding_number_by_angle(const DiscreteCurve& curve, const Vec2& point) {
    require_valid(curve);
    require_off_curve(curve, point);
    double total = 0.0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Vec2 u = curve.node(i) - point;
        const Vec2 v = curve.node(i + 1) - point;
        total += std::atan2(cross2(u, v), u.dot(v));
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

bool parity_inside(const CurveSystem& system, const Vec2& point) {
    require_valid(system);
    long total = 0;
    for (const DiscreteCurve& c : system.curves) {
        require_off_curve(c, point);
        total += static_cast<long>(c.weight) * winding_raw(c, point);
    }
    return (std::llabs(total) % 2) == 1;
}

std::size_t ReconstructionGrid::count(CellLabel l) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
}

namespace {

struct Crossing {
    double x;
    int sign; // weighted
};

void label_row(const CurveSystem& system, ReconstructionGrid& grid, int iy) {
    const int nx = grid.nx;
    const double cy = grid.cell_center(0, iy).y();
    std::vector<Crossing> crossings;
    for (const DiscreteCurve& c : system.curves) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Vec2 a = c.node(i);
            const Vec2 b = c.node(i + 1);
            int s = 0;
            if (a.y() <= cy && cy < b.y())
                s = 1;
            else if (b.y() <= cy && cy < a.y())
                s = -1;
            if (s == 0) continue;
            const double t = (cy - a.y()) / (b.y() - a.y());
            crossings.push_back({a.x() + t * (b.x() - a.x()), s * c.weight});
        }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& u, const Crossing& v) { return u.x > v.x; });
    // Winding at x = sum of crossing signs strictly to the right.
    std::size_t k = 0;
    long wind = 0;
    for (int ix = nx - 1; ix >= 0; --ix) {
        const double cx = grid.cell_center(ix, iy).x();
        while (k < crossings.size() && crossings[k].x > cx) {
            wind += crossings[k].sign;
            ++k;
        }
        const std::size_t idx = static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                                static_cast<std::size_t>(ix);
        grid.labels[idx] = (std::llabs(wind) % 2 == 1) ? CellLabel::Inside
                                                       : CellLabel::Outside;
    }
}

void stamp_boundary(const CurveSystem& system, ReconstructionGrid& grid) {
    const double dx = (grid.hi.x() - grid.lo.x()) / grid.nx;
    const double dy = (grid.hi.y() - grid.lo.y()) / grid.ny;
    const double diag = std::hypot(dx, dy);
    for (const DiscreteCurve& c : system.curves) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Vec2 a = c.node(i);
            const Vec2 b = c.node(i + 1);
            const double x0 = std::min(a.x(), b.x()) - diag;
            const double x1 = std::max(a.x(), b.x()) + diag;
            const double y0 = std::min(a.y(), b.y()) - diag;
            const double y1 = std::max(a.y(), b.y()) + diag;
            const int ix0 = std::max(0, static_cast<int>(std::floor((x0 - grid.lo.x()) / dx)));
            const int ix1 = std::min(grid.nx - 1, static_cast<int>(std::ceil((x1 - grid.lo.x()) / dx)));
            const int iy0 = std::max(0, static_cast<int>(std::floor((y0 - grid.lo.y()) / dy)));
            const int iy1 = std::min(grid.ny - 1, static_cast<int>(std::ceil((y1 - grid.lo.y()) / dy)));
            for (int iy = iy0; iy <= iy1; ++iy)
                for (int ix = ix0; ix <= ix1; ++ix) {
                    const Vec2 p = grid.cell_center(ix, iy);
                    if (dist_point_segment(p, a, b) <= diag) {
                        const std::size_t idx =
                            static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid.nx) +
                            static_cast<std::size_t>(ix);
                        grid.labels[idx] = CellLabel::Boundary;
                    }
                }
        }
    }
}

} // namespace

ReconstructionGrid reconstruct_set(const CurveSystem& system, const Vec2& lo,
                                   const Vec2& hi, int nx, int ny, int threads) {
    require_valid(system);
    if (nx < 2 || ny < 2 || hi.x() <= lo.x() || hi.y() <= lo.y())
        throw InputError("reconstruction grid needs a proper bbox and resolution >= 2");
    ReconstructionGrid grid;
    grid.lo = lo;
    grid.hi = hi;
    grid.nx = nx;
    grid.ny = ny;
    grid.labels.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny),
                       CellLabel::Outside);

    if (threads <= 1) {
        for (int iy = 0; iy < ny; ++iy) label_row(system, grid, iy);
    } else {
        std::vector<std::thread> pool;
        const int nt = std::min(threads, ny);
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t]() {
                for (int iy = t; iy < ny; iy += nt) label_row(system, grid, iy);
            });
        for (std::thread& th : pool) th.join();
    }
    stamp_boundary(system, grid);
    return grid;
}

double estimated_area(const ReconstructionGrid& grid) {
    return (static_cast<double>(grid.count(CellLabel::Inside)) +
            0.5 * static_cast<double>(grid.count(CellLabel::Boundary))) *
           grid.cell_area();
}

std::vector<Vec2> odd_multiplicity_field(const CurveSystem& system,
                                         const std::vector<Vec2>& samples, double tol) {
    require_valid(system);
    std::vector<Vec2> out;
    for (const Vec2& p : samples) {
        const int m = multiplicity_at(system, p, tol);
        if (m == 0)
            throw InputError("odd_multiplicity_field sample is not on the support");
        if (m % 2 == 1) out.push_back(p);
    }
    return out;
}

} // namespace elastica
