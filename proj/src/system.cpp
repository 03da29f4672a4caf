#include "elastica/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "elastica/geom.hpp"

namespace elastica {

std::string validate(const CurveSystem& system) {
    if (system.curves.empty()) return "system contains no curves";
    for (std::size_t i = 0; i < system.curves.size(); ++i) {
        const std::string err = validate(system.curves[i]);
        if (!err.empty()) {
            std::ostringstream os;
            os << "curve " << i << ": " << err;
            return os.str();
        }
    }
    return {};
}

void require_valid(const CurveSystem& system) {
    const std::string err = validate(system);
    if (!err.empty()) throw InputError("invalid system: " + err);
}

double system_bbox_diagonal(const CurveSystem& system) {
    if (system.curves.empty()) return 0.0;
    Vec2 lo = system.curves.front().nodes.front();
    Vec2 hi = lo;
    for (const DiscreteCurve& c : system.curves)
        for (const Vec2& q : c.nodes) {
            lo = lo.cwiseMin(q);
            hi = hi.cwiseMax(q);
        }
    return (hi - lo).norm();
}

double system_diameter(const CurveSystem& system) {
    return system_bbox_diagonal(system);
}

double mass(const CurveSystem& system) {
    double sum = 0.0;
    for (const DiscreteCurve& c : system.curves) sum += c.weight * length(c);
    return sum;
}

EnergyReport system_energy(const CurveSystem& system, double p, double lambda) {
    if (p < 1.0) throw InputError("system energy requires p >= 1");
    require_valid(system);
    EnergyReport rep;
    double e1 = 0.0;
    for (const DiscreteCurve& c : system.curves) {
        const double len = length(c);
        const double ep = elastic_energy(c, p);
        rep.per_curve.emplace_back(len, ep);
        rep.mass += c.weight * len;
        rep.elastic += c.weight * ep;
        e1 += c.weight * total_absolute_curvature(c);
    }
    rep.total = lambda * rep.mass + rep.elastic;

    const double tol = 1e-6;
    Verdict lower{"2 <= E_1", 2.0, e1, 2.0 <= e1 * (1.0 + tol) + tol};
    const double pprime = (p > 1.0) ? p / (p - 1.0) : 0.0;
    double holder = e1;
    if (p > 1.0)
        holder = std::pow(rep.mass, 1.0 / pprime) * std::pow(rep.elastic, 1.0 / p);
    Verdict upper{"E_1 <= mass^{1/p'} E_p^{1/p}", e1, holder,
                  e1 <= holder * (1.0 + tol) + tol};
    rep.checks.push_back(lower);
    rep.checks.push_back(upper);
    return rep;
}

std::vector<Verdict> holder_chain_check(const CurveSystem& system, double p) {
    return system_energy(system, p).checks;
}

double energy_in_ball(const CurveSystem& system, const Vec2& center, double r,
                      double p, double lambda) {
    if (p < 1.0 || r <= 0.0) throw InputError("energy_in_ball needs p >= 1, r > 0");
    require_valid(system);
    double acc = 0.0;
    for (const DiscreteCurve& c : system.curves) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        const double w = static_cast<double>(c.weight);
        const std::vector<double> phi = turning_angles(c);
        for (std::ptrdiff_t i = 0; i < n; ++i)
            acc += w * lambda * clipped_segment_length(c.node(i), c.node(i + 1), center, r);
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if ((c.node(i) - center).norm() > r) continue;
            const double ell = 0.5 * (c.edge(i - 1).norm() + c.edge(i).norm());
            acc += w * std::pow(std::abs(phi[static_cast<std::size_t>(i)]), p) /
                   std::pow(ell, p - 1.0);
        }
    }
    return acc;
}

int multiplicity_at(const CurveSystem& system, const Vec2& point, double tol) {
    require_valid(system);
    int total = 0;
    for (const DiscreteCurve& c : system.curves) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        std::vector<bool> near(static_cast<std::size_t>(n), false);
        bool any = false;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (dist_point_segment(point, c.node(i), c.node(i + 1)) <= tol) {
                near[static_cast<std::size_t>(i)] = true;
                any = true;
            }
        }
        if (!any) continue;
        // Count maximal cyclic runs of near edges; each run is one pass.
        int runs = 0;
        bool all = true;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const bool prev = near[static_cast<std::size_t>((i + n - 1) % n)];
            if (near[static_cast<std::size_t>(i)] && !prev) ++runs;
            if (!near[static_cast<std::size_t>(i)]) all = false;
        }
        if (all) runs = 1;
        total += c.weight * runs;
    }
    return total;
}

std::vector<Verdict> density_bound_check(const CurveSystem& system, double p,
                                         const std::vector<Vec2>& sample_points) {
    (void)p; // the density bound only involves E_1
    require_valid(system);
    double e1 = 0.0;
    for (const DiscreteCurve& c : system.curves)
        e1 += c.weight * total_absolute_curvature(c);
    const double bound = e1 / 2.0;
    const double tol = 1e-6 * std::max(system_diameter(system), 1.0);
    std::vector<Verdict> out;
    for (const Vec2& x : sample_points) {
        const int theta = multiplicity_at(system, x, tol);
        std::ostringstream os;
        os << "theta(" << x.x() << "," << x.y() << ") <= E_1/2";
        // Integer density against a real bound; half-unit slack absorbs the
        // discrete curvature underestimate on coarse polylines.
        out.push_back(Verdict{os.str(), static_cast<double>(theta), bound,
                              static_cast<double>(theta) <= bound + 0.5});
    }
    return out;
}

double first_variation_residual(const CurveSystem& system,
                                const std::vector<VectorField>& fields) {
    require_valid(system);
    double worst = 0.0;
    for (const VectorField& X : fields) {
        double acc = 0.0;
        for (const DiscreteCurve& c : system.curves) {
            const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
            const double w = static_cast<double>(c.weight);
            // Tangential divergence integrated edge-by-edge with midpoint
            // quadrature, plus the exact nodal turning vectors.
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                const Vec2 a = c.node(i);
                const Vec2 b = c.node(i + 1);
                const Vec2 e = b - a;
                const double len = e.norm();
                const Vec2 t = e / len;
                const Mat2 J = X.jacobian(0.5 * (a + b));
                acc += w * len * t.dot(J * t);
            }
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                const Vec2 tprev = c.edge(i - 1).normalized();
                const Vec2 tnext = c.edge(i).normalized();
                const Vec2 K = tnext - tprev;
                acc += w * X.value(c.node(i)).dot(K);
            }
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double monotonicity_tolerance(const CurveSystem& system) {
    double e2 = 0.0;
    for (const DiscreteCurve& c : system.curves)
        e2 += c.weight * elastic_energy(c, 2.0);
    return 1e-3 * (mass(system) + e2);
}

MonotonicityProfile monotonicity_profile(const CurveSystem& system, const Vec2& center,
                                         const std::vector<double>& radii,
                                         double p_check) {
    if (p_check != 2.0) throw InputError("monotone quantity is defined for p = 2");
    if (radii.empty()) throw InputError("monotonicity profile needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0) throw InputError("radii must be positive");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw InputError("radii must be strictly increasing");
    }
    require_valid(system);

    MonotonicityProfile prof;
    prof.center = center;
    prof.radii = radii;

    double e2 = 0.0;
    for (const DiscreteCurve& c : system.curves)
        e2 += c.weight * elastic_energy(c, 2.0);
    prof.limit_estimate = 0.5 * (mass(system) + e2);

    for (double r : radii) {
        double mu = 0.0;      // mu(B_r)
        double kdotx = 0.0;   // int_{B_r} <k, x - x0> dmu
        double ksq = 0.0;     // int_{B_r} |k|^2 dmu
        for (const DiscreteCurve& c : system.curves) {
            const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
            const double w = static_cast<double>(c.weight);
            for (std::ptrdiff_t i = 0; i < n; ++i)
                mu += w * clipped_segment_length(c.node(i), c.node(i + 1), center, r);
            // Nodal curvature measure K_i delta_{x_i}; attribute a node's
            // contribution to the ball containing it.
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                const Vec2 x = c.node(i);
                if ((x - center).norm() > r) continue;
                const Vec2 K = c.edge(i).normalized() - c.edge(i - 1).normalized();
                const double ell = 0.5 * (c.edge(i - 1).norm() + c.edge(i).norm());
                kdotx += w * K.dot(x - center);
                ksq += w * K.squaredNorm() / ell;
            }
        }
        const double A = (0.5 + 1.0 / r) * mu + kdotx / r + 0.5 * ksq;
        prof.values.push_back(A);
    }

    const double tol = monotonicity_tolerance(system);
    for (std::size_t i = 0; i + 1 < prof.values.size(); ++i) {
        if (prof.values[i + 1] < prof.values[i] - tol) {
            prof.monotone = false;
            prof.violation_index = i;
            break;
        }
    }
    return prof;
}

namespace {

// C^inf bump: w(u) = exp(1 - 1/(1-u)) for u in [0,1), 0 for u >= 1.
// w(0) = 1, all derivatives vanish at u = 1.
double bump(double u) {
    if (u >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u));
}

double bump_deriv(double u) {
    if (u >= 1.0) return 0.0;
    const double d = 1.0 - u;
    return -bump(u) / (d * d);
}

double poly_eval(const std::vector<double>& coeffs, double s) {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * s + coeffs[k];
    return v;
}

Vec2 poly_grad_part(const std::vector<double>& coeffs, double s) {
    // d/ds of the polynomial; caller supplies ds/dx.
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;)
        v = v * s + static_cast<double>(k) * coeffs[k];
    return Vec2(v, v);
}

} // namespace

VectorField radial_bump_field(double R) {
    if (R <= 0.0) throw InputError("bump field radius must be positive");
    VectorField X;
    X.value = [R](const Vec2& x) -> Vec2 {
        return x * bump(x.squaredNorm() / (R * R));
    };
    X.jacobian = [R](const Vec2& x) -> Mat2 {
        const double u = x.squaredNorm() / (R * R);
        const double w = bump(u);
        const double wp = bump_deriv(u);
        // D(x w(u)) = w I + x (w'(u) * 2 x / R^2)^T
        Mat2 J = w * Mat2::Identity();
        J += (2.0 * wp / (R * R)) * (x * x.transpose());
        return J;
    };
    return X;
}

VectorField polynomial_bump_field(const Vec2& center, double R,
                                  const std::vector<double>& coeffs_x,
                                  const std::vector<double>& coeffs_y) {
    if (R <= 0.0) throw InputError("bump field radius must be positive");
    if (coeffs_x.empty() || coeffs_y.empty())
        throw InputError("bump field needs nonempty coefficient lists");
    VectorField X;
    // Component i is P_i(s) * w(u) with s = (x - c).x + 2 (x - c).y (a fixed
    // generic linear functional) and u = |x - c|^2 / R^2.
    auto sfun = [center](const Vec2& x) { return (x - center).x() + 2.0 * (x - center).y(); };
    X.value = [center, R, coeffs_x, coeffs_y, sfun](const Vec2& x) -> Vec2 {
        const double u = (x - center).squaredNorm() / (R * R);
        const double w = bump(u);
        const double s = sfun(x);
        return Vec2(poly_eval(coeffs_x, s) * w, poly_eval(coeffs_y, s) * w);
    };
    X.jacobian = [center, R, coeffs_x, coeffs_y, sfun](const Vec2& x) -> Mat2 {
        const double u = (x - center).squaredNorm() / (R * R);
        const double w = bump(u);
        const double wp = bump_deriv(u);
        const double s = sfun(x);
        const Vec2 grad_u = 2.0 * (x - center) / (R * R);
        const Vec2 grad_s(1.0, 2.0);
        const double px = poly_eval(coeffs_x, s);
        const double py = poly_eval(coeffs_y, s);
        const double dpx = poly_grad_part(coeffs_x, s).x();
        const double dpy = poly_grad_part(coeffs_y, s).x();
        Mat2 J;
        J.row(0) = (dpx * w) * grad_s.transpose() + (px * wp) * grad_u.transpose();
        J.row(1) = (dpy * w) * grad_s.transpose() + (py * wp) * grad_u.transpose();
        return J;
    };
    return X;
}

} // namespace elastica
