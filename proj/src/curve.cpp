#include "elastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace elastica {

double bbox_diagonal(const DiscreteCurve& curve) {
    if (curve.nodes.empty()) return 0.0;
    Vec2 lo = curve.nodes.front();
    Vec2 hi = lo;
    for (const Vec2& q : curve.nodes) {
        lo = lo.cwiseMin(q);
        hi = hi.cwiseMax(q);
    }
    return (hi - lo).norm();
}

std::string validate(const DiscreteCurve& curve) {
    const std::size_t n = curve.size();
    if (n < 8) {
        std::ostringstream os;
        os << "curve has " << n << " nodes, need at least 8";
        return os.str();
    }
    if (curve.weight < 1) return "curve weight must be a positive integer";
    for (const Vec2& q : curve.nodes)
        if (!q.allFinite()) return "curve contains non-finite coordinates";

    const double eps_geom = kEpsGeomRel * bbox_diagonal(curve);
    for (std::size_t i = 0; i < n; ++i) {
        const double len = curve.edge(static_cast<std::ptrdiff_t>(i)).norm();
        if (len <= eps_geom) {
            std::ostringstream os;
            os << "degenerate edge " << i << " (length " << len << ")";
            return os.str();
        }
    }
    const std::vector<double> phi = turning_angles(curve);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(phi[i]) >= M_PI - kEpsAng) {
            std::ostringstream os;
            os << "reversal at node " << i << " (turning angle " << phi[i] << ")";
            return os.str();
        }
    }
    return {};
}

void require_valid(const DiscreteCurve& curve) {
    const std::string err = validate(curve);
    if (!err.empty()) throw InputError("invalid curve: " + err);
}

std::vector<double> turning_angles(const DiscreteCurve& curve) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    std::vector<double> phi(static_cast<std::size_t>(n));
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Vec2 a = curve.edge(i - 1);
        const Vec2 b = curve.edge(i);
        phi[static_cast<std::size_t>(i)] = std::atan2(cross2(a, b), a.dot(b));
    }
    return phi;
}

CurvatureProfile curvature_profile(const DiscreteCurve& curve) {
    require_valid(curve);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    const std::vector<double> phi = turning_angles(curve);
    CurvatureProfile prof;
    prof.curvature.resize(static_cast<std::size_t>(n));
    prof.dual_length.resize(static_cast<std::size_t>(n));
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double ell = 0.5 * (curve.edge(i - 1).norm() + curve.edge(i).norm());
        prof.dual_length[static_cast<std::size_t>(i)] = ell;
        prof.curvature[static_cast<std::size_t>(i)] = phi[static_cast<std::size_t>(i)] / ell;
    }
    return prof;
}

double length(const DiscreteCurve& curve) {
    double sum = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(curve.size()); ++i)
        sum += curve.edge(i).norm();
    return sum;
}

namespace {

double bend_term(double phi, double p, double delta) {
    if (delta > 0.0)
        return std::pow(phi * phi + delta * delta, 0.5 * p) - std::pow(delta, p);
    return std::pow(std::abs(phi), p);
}

} // namespace

double elastic_energy(const DiscreteCurve& curve, double p, double delta) {
    if (p < 1.0) throw InputError("elastic energy requires p >= 1");
    require_valid(curve);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    const std::vector<double> phi = turning_angles(curve);
    double sum = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double ell = 0.5 * (curve.edge(i - 1).norm() + curve.edge(i).norm());
        sum += bend_term(phi[static_cast<std::size_t>(i)], p, delta) / std::pow(ell, p - 1.0);
    }
    return sum;
}

double total_energy(const DiscreteCurve& curve, double p, double lambda, double delta) {
    if (lambda <= 0.0) throw InputError("total energy requires lambda > 0");
    return lambda * length(curve) + elastic_energy(curve, p, delta);
}

double total_absolute_curvature(const DiscreteCurve& curve) {
    require_valid(curve);
    const std::vector<double> phi = turning_angles(curve);
    double sum = 0.0;
    for (double a : phi) sum += std::abs(a);
    return sum;
}

TurningNumber turning_number(const DiscreteCurve& curve) {
    require_valid(curve);
    const std::vector<double> phi = turning_angles(curve);
    const double total = std::accumulate(phi.begin(), phi.end(), 0.0);
    TurningNumber tn;
    const double w = total / (2.0 * M_PI);
    tn.index = static_cast<int>(std::lround(w));
    tn.residual = std::abs(w - tn.index);
    tn.reliable = tn.residual <= kTurningResidualLimit;
    return tn;
}

DiscreteCurve resample_arclength(const DiscreteCurve& curve, std::size_t n) {
    require_valid(curve);
    if (n < 8) throw InputError("resample target must have at least 8 nodes");
    const std::size_t m = curve.size();
    std::vector<double> cum(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        cum[i + 1] = cum[i] + curve.edge(static_cast<std::ptrdiff_t>(i)).norm();
    const double total = cum[m];

    DiscreteCurve out;
    out.weight = curve.weight;
    out.nodes.resize(n);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double s = total * static_cast<double>(k) / static_cast<double>(n);
        while (seg + 1 < m && cum[seg + 1] <= s) ++seg;
        const double t = (s - cum[seg]) / (cum[seg + 1] - cum[seg]);
        out.nodes[k] = curve.node(static_cast<std::ptrdiff_t>(seg)) +
                       t * curve.edge(static_cast<std::ptrdiff_t>(seg));
    }
    return out;
}

double chain_energy(const DiscreteCurve& curve, std::size_t i0, std::size_t i1,
                    double p, double lambda, double delta) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    const std::vector<double> phi = turning_angles(curve);
    const std::ptrdiff_t a = static_cast<std::ptrdiff_t>(i0);
    std::ptrdiff_t span = ((static_cast<std::ptrdiff_t>(i1) - a) % n + n) % n;
    double len = 0.0;
    for (std::ptrdiff_t k = 0; k < span; ++k) len += curve.edge(a + k).norm();
    double bend = 0.0;
    for (std::ptrdiff_t k = 0; k <= span; ++k) {
        const std::ptrdiff_t i = a + k;
        const double ell = 0.5 * (curve.edge(i - 1).norm() + curve.edge(i).norm());
        const std::size_t idx = static_cast<std::size_t>(((i % n) + n) % n);
        bend += bend_term(phi[idx], p, delta) / std::pow(ell, p - 1.0);
    }
    return lambda * len + bend;
}

} // namespace elastica
