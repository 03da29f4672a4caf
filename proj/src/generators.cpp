#include "elastica/generators.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "elastica/path.hpp"

namespace elastica {

DiscreteCurve make_circle(double r, std::size_t n, const Vec2& center, bool ccw,
                          int weight) {
    if (r <= 0.0 || n < 8) throw InputError("circle needs r > 0 and n >= 8");
    DiscreteCurve c;
    c.weight = weight;
    c.nodes.resize(n);
    const double sgn = ccw ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = sgn * 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        c.nodes[k] = center + r * Vec2(std::cos(t), std::sin(t));
    }
    return c;
}

DiscreteCurve make_ellipse(double a, double b, std::size_t n) {
    if (a <= 0.0 || b <= 0.0 || n < 8) throw InputError("ellipse needs a,b > 0 and n >= 8");
    DiscreteCurve c;
    c.nodes.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        c.nodes[k] = Vec2(a * std::cos(t), b * std::sin(t));
    }
    return c;
}

DiscreteCurve make_square(double s, std::size_t n) {
    if (s <= 0.0 || n < 8 || n % 4 != 0)
        throw InputError("square needs s > 0 and n divisible by 4");
    const std::size_t m = n / 4;
    const double h = s / 2.0;
    const Vec2 corners[4] = {Vec2(-h, -h), Vec2(h, -h), Vec2(h, h), Vec2(-h, h)};
    DiscreteCurve c;
    c.nodes.reserve(n);
    for (int side = 0; side < 4; ++side) {
        const Vec2 a = corners[side];
        const Vec2 b = corners[(side + 1) % 4];
        for (std::size_t k = 0; k < m; ++k)
            c.nodes.push_back(a + (static_cast<double>(k) / static_cast<double>(m)) * (b - a));
    }
    return c;
}

DiscreteCurve make_rounded_square(const Vec2& lo, const Vec2& hi, double rho,
                                  std::size_t n) {
    if (rho <= 0.0 || hi.x() - lo.x() <= 2.0 * rho || hi.y() - lo.y() <= 2.0 * rho)
        throw InputError("rounded square needs 0 < rho < half the side");
    if (n < 16) throw InputError("rounded square needs n >= 16");
    std::vector<PathPiece> pieces;
    pieces.push_back(segment_piece(Vec2(lo.x() + rho, lo.y()), Vec2(hi.x() - rho, lo.y())));
    pieces.push_back(arc_piece(Vec2(hi.x() - rho, lo.y() + rho), rho, -M_PI / 2, M_PI / 2));
    pieces.push_back(segment_piece(Vec2(hi.x(), lo.y() + rho), Vec2(hi.x(), hi.y() - rho)));
    pieces.push_back(arc_piece(Vec2(hi.x() - rho, hi.y() - rho), rho, 0.0, M_PI / 2));
    pieces.push_back(segment_piece(Vec2(hi.x() - rho, hi.y()), Vec2(lo.x() + rho, hi.y())));
    pieces.push_back(arc_piece(Vec2(lo.x() + rho, hi.y() - rho), rho, M_PI / 2, M_PI / 2));
    pieces.push_back(segment_piece(Vec2(lo.x(), hi.y() - rho), Vec2(lo.x(), lo.y() + rho)));
    pieces.push_back(arc_piece(Vec2(lo.x() + rho, lo.y() + rho), rho, M_PI, M_PI / 2));
    DiscreteCurve c;
    c.nodes = sample_path(pieces, n);
    return c;
}

namespace {

Vec2 lemniscate(double t) {
    const double d = 1.0 + std::sin(t) * std::sin(t);
    return Vec2(std::cos(t) / d, std::sin(t) * std::cos(t) / d);
}

} // namespace

DiscreteCurve make_figure_eight(std::size_t n) {
    if (n < 16 || n % 4 != 0)
        throw InputError("figure eight needs n >= 16 divisible by 4");
    DiscreteCurve c;
    c.nodes.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        c.nodes[k] = lemniscate(t);
    }
    // n divisible by 4 puts nodes exactly at both origin passes; pin them.
    c.nodes[n / 4] = Vec2(0, 0);
    c.nodes[3 * n / 4] = Vec2(0, 0);
    return c;
}

CurveSystem make_figure_eight_lobes(std::size_t n) {
    if (n < 32 || n % 4 != 0)
        throw InputError("figure eight lobes need n >= 32 divisible by 4");
    const std::size_t m = n / 2;
    CurveSystem sys;
    for (int lobe = 0; lobe < 2; ++lobe) {
        DiscreteCurve c;
        c.nodes.resize(m);
        const double t0 = (lobe == 0) ? -M_PI / 2 : M_PI / 2;
        for (std::size_t k = 0; k < m; ++k) {
            const double t = t0 + M_PI * static_cast<double>(k) / static_cast<double>(m);
            c.nodes[k] = lemniscate(t);
        }
        c.nodes[0] = Vec2(0, 0);
        sys.curves.push_back(c);
    }
    return sys;
}

std::vector<Vec2> petal_points(const Vec2& tip, const Vec2& u, double scale,
                               std::size_t n) {
    if (n < 8) throw InputError("petal needs at least 8 interior samples");
    // Three tangent arcs of equal radius form a teardrop with curvature
    // bounded by 1/r: a 60-degree dip below the axis, a 300-degree cap, and
    // the mirrored 60-degree rise. Leaves the tip along +x, returns along
    // -x, both with quadratic (bounded-curvature) contact.
    const double r = 1.0;
    const double c2 = std::sqrt(3.0) * r;
    std::vector<PathPiece> pieces;
    pieces.push_back(arc_piece(Vec2(0, -r), r, M_PI / 2, -M_PI / 3));
    pieces.push_back(arc_piece(Vec2(c2, 0), r, -5.0 * M_PI / 6, 5.0 * M_PI / 3));
    pieces.push_back(arc_piece(Vec2(0, r), r, -M_PI / 6, -M_PI / 3));
    double total = 0.0;
    for (const PathPiece& p : pieces) total += p.len;

    const Vec2 v = perp(u);
    std::vector<Vec2> out(n);
    std::size_t idx = 0;
    double base = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = total * static_cast<double>(j + 1) / static_cast<double>(n + 1);
        while (idx + 1 < pieces.size() && base + pieces[idx].len <= s) {
            base += pieces[idx].len;
            ++idx;
        }
        const Vec2 g = pieces[idx].at(s - base);
        out[j] = tip + scale * (g.x() * u + g.y() * v);
    }
    return out;
}

namespace {

void append_axis_interior(std::vector<Vec2>& nodes, const Vec2& from, const Vec2& to,
                          std::size_t m) {
    // m nodes strictly between `from` and `to`.
    for (std::size_t k = 1; k <= m; ++k)
        nodes.push_back(from + (static_cast<double>(k) / static_cast<double>(m + 1)) * (to - from));
}

DiscreteCurve make_drops_axis_curve(const Vec2& tip_a, const Vec2& tip_b,
                                    std::size_t n) {
    // Petal at tip_a, axis tip_a -> tip_b, petal at tip_b, axis back. Each
    // tip appears twice (petal departure and petal return); the axis is
    // traversed twice, once in each direction.
    const Vec2 u = (tip_a - tip_b).normalized();
    const std::size_t petal_n = n / 3;
    const std::size_t axis_n = std::max<std::size_t>((n - 2 * petal_n) / 2, 8) - 2;
    DiscreteCurve c;
    c.nodes.push_back(tip_a);
    for (const Vec2& q : petal_points(tip_a, u, 0.75, petal_n)) c.nodes.push_back(q);
    c.nodes.push_back(tip_a);
    append_axis_interior(c.nodes, tip_a, tip_b, axis_n);
    c.nodes.push_back(tip_b);
    for (const Vec2& q : petal_points(tip_b, -u, 0.75, petal_n)) c.nodes.push_back(q);
    c.nodes.push_back(tip_b);
    append_axis_interior(c.nodes, tip_b, tip_a, axis_n);
    return c;
}

} // namespace

DiscreteCurve make_two_cusp_drops(std::size_t n) {
    if (n < 64) throw InputError("two-cusp drops need n >= 64");
    return make_drops_axis_curve(Vec2(1, 0), Vec2(-1, 0), n);
}

CurveSystem make_figbm(std::size_t n) {
    if (n < 64) throw InputError("cross-and-drops needs n >= 64");
    CurveSystem sys;
    sys.curves.push_back(make_drops_axis_curve(Vec2(1, 0), Vec2(-1, 0), n));
    sys.curves.push_back(make_drops_axis_curve(Vec2(0, 1), Vec2(0, -1), n));
    return sys;
}

namespace {

// Closed drop at the origin: out along unit direction a, circular cap of
// radius r, back along unit direction b into the origin.
DiscreteCurve make_drop(const Vec2& a, const Vec2& b, double r, std::size_t n) {
    // Center of the cap: L a + s r perp(a) = M b - s r perp(b), with the
    // sign s picked so both ray lengths come out positive.
    Eigen::Matrix2d A;
    A.col(0) = a;
    A.col(1) = -b;
    DiscreteCurve c;
    for (double s : {1.0, -1.0}) {
        const Vec2 rhs = -s * r * (perp(a) + perp(b));
        const Vec2 lm = A.fullPivLu().solve(rhs);
        const double L = lm.x();
        const double M = lm.y();
        if (L <= 1e-9 || M <= 1e-9) continue;
        const Vec2 P = L * a;
        const Vec2 Q = M * b;
        const Vec2 C = P + s * r * perp(a);
        const double a0 = std::atan2((P - C).y(), (P - C).x());
        const double a1 = std::atan2((Q - C).y(), (Q - C).x());
        // Cap center on the left of travel (s > 0) means a ccw cap.
        double sweep = std::fmod(std::fmod(a1 - a0, 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI);
        if (s < 0) sweep -= 2.0 * M_PI;
        std::vector<PathPiece> pieces;
        pieces.push_back(segment_piece(Vec2(0, 0), P));
        pieces.push_back(arc_piece(C, r, a0, sweep));
        pieces.push_back(segment_piece(Q, Vec2(0, 0)));
        c.nodes = sample_path(pieces, n);
        c.nodes[0] = Vec2(0, 0);
        return c;
    }
    throw InputError("drop construction failed: cap radius too large for the angle");
}

} // namespace

CurveSystem make_three_drop_junction(double theta, std::size_t n) {
    if (theta <= 0.0 || theta >= M_PI / 6)
        throw InputError("junction angle must lie in (0, pi/6)");
    if (n < 32) throw InputError("three-drop junction needs n >= 32 per drop");
    const double sf = std::sin(theta) + std::sin(2.0 * theta);
    if (sf >= 1.0) throw InputError("junction angle too large");
    const double f = std::asin(sf);
    auto dir = [](double ang) { return Vec2(std::cos(ang), std::sin(ang)); };
    const double r = 0.3;
    CurveSystem sys;
    sys.curves.push_back(make_drop(dir(-theta), dir(-2.0 * theta), r, n));
    sys.curves.push_back(make_drop(dir(-M_PI + theta), dir(-M_PI + 2.0 * theta), r, n));
    sys.curves.push_back(make_drop(dir(f), dir(M_PI - f), r, n));
    return sys;
}

DiscreteCurve make_star_curve(double r0, const std::vector<double>& amp,
                              const std::vector<double>& phase, std::size_t n) {
    if (r0 <= 0.0 || n < 8 || amp.size() != phase.size())
        throw InputError("star curve needs r0 > 0, n >= 8, matching amp/phase");
    DiscreteCurve c;
    c.nodes.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
        double r = 1.0;
        for (std::size_t k = 0; k < amp.size(); ++k)
            r += amp[k] * std::cos(static_cast<double>(k + 1) * a + phase[k]);
        c.nodes[j] = r0 * r * Vec2(std::cos(a), std::sin(a));
    }
    return c;
}

double CurveRng::uniform(double lo, double hi) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

DiscreteCurve random_convex_curve(CurveRng& rng, std::size_t n) {
    // Support-style harmonics small enough to keep the curvature positive:
    // sum_k a_k (k^2 + 1) < 1 guarantees r + r'' ... stays safely convex.
    std::vector<double> amp(3), phase(3);
    double budget = 0.8;
    for (std::size_t k = 0; k < 3; ++k) {
        const double w = static_cast<double>((k + 1) * (k + 1) + 1);
        const double a = rng.uniform(0.0, budget / (3.0 * w));
        amp[k] = a;
        phase[k] = rng.uniform(0.0, 2.0 * M_PI);
    }
    return make_star_curve(rng.uniform(0.5, 2.0), amp, phase, n);
}

DiscreteCurve random_star_curve(CurveRng& rng, std::size_t n) {
    std::vector<double> amp(4), phase(4);
    for (std::size_t k = 0; k < 4; ++k) {
        amp[k] = rng.uniform(0.0, 0.12);
        phase[k] = rng.uniform(0.0, 2.0 * M_PI);
    }
    return make_star_curve(rng.uniform(0.5, 2.0), amp, phase, n);
}

} // namespace elastica
