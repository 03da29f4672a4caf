#pragma once

#include <functional>
#include <vector>

#include "elastica/types.hpp"

namespace elastica {

// Arclength-parameterized piece of a composite path.
struct PathPiece {
    double len;
    std::function<Vec2(double)> at; // s in [0, len]
};

PathPiece segment_piece(const Vec2& a, const Vec2& b);

// Arc around `center` of radius r from angle a0, sweeping `sweep` radians
// (signed, ccw positive).
PathPiece arc_piece(const Vec2& center, double r, double a0, double sweep);

// n equally spaced samples along the concatenated pieces; the final point
// is excluded (closed-curve sampling).
std::vector<Vec2> sample_path(const std::vector<PathPiece>& pieces, std::size_t n);

// n samples including both endpoints (open-run sampling), n >= 2.
std::vector<Vec2> sample_path_open(const std::vector<PathPiece>& pieces, std::size_t n);

} // namespace elastica
