#include "elastica/path.hpp"

#include <cmath>

namespace elastica {

PathPiece segment_piece(const Vec2& a, const Vec2& b) {
    const double len = (b - a).norm();
    return {len, [a, b, len](double s) -> Vec2 { return a + (s / len) * (b - a); }};
}

PathPiece arc_piece(const Vec2& c, double r, double a0, double sweep) {
    const double len = r * std::abs(sweep);
    return {len, [c, r, a0, sweep, len](double s) -> Vec2 {
                const double a = a0 + sweep * (s / len);
                return c + r * Vec2(std::cos(a), std::sin(a));
            }};
}

namespace {

std::vector<Vec2> sample_at(const std::vector<PathPiece>& pieces, std::size_t n,
                            double denom) {
    double total = 0.0;
    for (const PathPiece& p : pieces) total += p.len;
    std::vector<Vec2> out(n);
    std::size_t idx = 0;
    double base = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double s = total * static_cast<double>(k) / denom;
        while (idx + 1 < pieces.size() && base + pieces[idx].len <= s) {
            base += pieces[idx].len;
            ++idx;
        }
        out[k] = pieces[idx].at(std::min(s - base, pieces[idx].len));
    }
    return out;
}

} // namespace

std::vector<Vec2> sample_path(const std::vector<PathPiece>& pieces, std::size_t n) {
    return sample_at(pieces, n, static_cast<double>(n));
}

std::vector<Vec2> sample_path_open(const std::vector<PathPiece>& pieces, std::size_t n) {
    return sample_at(pieces, n, static_cast<double>(n - 1));
}

} // namespace elastica
