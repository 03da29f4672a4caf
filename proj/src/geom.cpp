#include "elastica/geom.hpp"

#include <algorithm>
#include <cmath>

namespace elastica {

double project_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const double dd = d.squaredNorm();
    if (dd == 0.0) return 0.0;
    return std::clamp((p - a).dot(d) / dd, 0.0, 1.0);
}

double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double t = project_point_segment(p, a, b);
    return (p - (a + t * (b - a))).norm();
}

double clipped_segment_length(const Vec2& a, const Vec2& b, const Vec2& c, double r) {
    const Vec2 d = b - a;
    const double len = d.norm();
    if (len == 0.0) return 0.0;
    // |a + t d - c|^2 <= r^2 as a quadratic in t.
    const Vec2 m = a - c;
    const double A = d.squaredNorm();
    const double B = 2.0 * m.dot(d);
    const double C = m.squaredNorm() - r * r;
    const double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) return 0.0;
    const double s = std::sqrt(disc);
    const double t0 = std::clamp((-B - s) / (2.0 * A), 0.0, 1.0);
    const double t1 = std::clamp((-B + s) / (2.0 * A), 0.0, 1.0);
    return (t1 - t0) * len;
}

std::optional<SegIntersection> intersect_segments(const Vec2& a0, const Vec2& b0,
                                                  const Vec2& a1, const Vec2& b1) {
    const Vec2 d0 = b0 - a0;
    const Vec2 d1 = b1 - a1;
    const double denom = cross2(d0, d1);
    const double scale = std::max(d0.norm(), d1.norm());
    if (std::abs(denom) <= 1e-14 * scale * scale) return std::nullopt;
    const Vec2 w = a1 - a0;
    const double t0 = cross2(w, d1) / denom;
    const double t1 = cross2(w, d0) / denom;
    const double slack = 1e-12;
    if (t0 < -slack || t0 > 1.0 + slack || t1 < -slack || t1 > 1.0 + slack)
        return std::nullopt;
    SegIntersection hit;
    hit.t0 = std::clamp(t0, 0.0, 1.0);
    hit.t1 = std::clamp(t1, 0.0, 1.0);
    hit.point = a0 + hit.t0 * d0;
    return hit;
}

} // namespace elastica
