#pragma once

#include <optional>

#include "elastica/types.hpp"

namespace elastica {

double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Closest parameter t in [0,1] of p on segment a + t(b-a).
double project_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Length of the portion of segment [a,b] inside the open ball B_r(c).
double clipped_segment_length(const Vec2& a, const Vec2& b, const Vec2& c, double r);

struct SegIntersection {
    double t0 = 0.0; // parameter on segment a0-b0
    double t1 = 0.0; // parameter on segment a1-b1
    Vec2 point = Vec2(0, 0);
};

// Proper (non-parallel) intersection of two segments, endpoints included.
std::optional<SegIntersection> intersect_segments(const Vec2& a0, const Vec2& b0,
                                                  const Vec2& a1, const Vec2& b1);

} // namespace elastica
