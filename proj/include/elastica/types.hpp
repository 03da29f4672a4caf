#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace elastica {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Thrown on invalid inputs (degenerate curves, bad parameters, malformed files).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A named check result: lhs OP rhs with a pass/fail verdict.
struct Verdict {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Left-rotate by pi/2.
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

} // namespace elastica
