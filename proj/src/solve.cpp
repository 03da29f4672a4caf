#include "elastica/solve.hpp"

#include <algorithm>
#include <cmath>

namespace elastica {

ConstraintSet ConstraintSet::all_free(const CurveSystem& system) {
    ConstraintSet cs;
    for (const DiscreteCurve& c : system.curves)
        cs.frozen.emplace_back(c.size(), false);
    return cs;
}

ConstraintSet ConstraintSet::freeze_outside_disc(const CurveSystem& system,
                                                 const Vec2& center, double r) {
    ConstraintSet cs;
    for (const DiscreteCurve& c : system.curves) {
        std::vector<bool> mask(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            mask[i] = (c.nodes[i] - center).norm() > r;
        cs.frozen.push_back(std::move(mask));
    }
    return cs;
}

ConstraintSet ConstraintSet::freeze_outside_rect(const CurveSystem& system,
                                                 const Vec2& lo, const Vec2& hi) {
    ConstraintSet cs;
    for (const DiscreteCurve& c : system.curves) {
        std::vector<bool> mask(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Vec2& q = c.nodes[i];
            mask[i] = q.x() < lo.x() || q.x() > hi.x() || q.y() < lo.y() || q.y() > hi.y();
        }
        cs.frozen.push_back(std::move(mask));
    }
    return cs;
}

namespace {

double g_of(double phi, double p, double delta) {
    if (delta > 0.0)
        return std::pow(phi * phi + delta * delta, 0.5 * p) - std::pow(delta, p);
    return std::pow(std::abs(phi), p);
}

double dg_of(double phi, double p, double delta) {
    if (delta > 0.0)
        return p * phi * std::pow(phi * phi + delta * delta, 0.5 * p - 1.0);
    if (phi == 0.0) return 0.0;
    return p * std::pow(std::abs(phi), p - 1.0) * (phi > 0 ? 1.0 : -1.0);
}

double solve_energy(const CurveSystem& system, double p, double lambda, double delta) {
    double e = 0.0;
    for (const DiscreteCurve& c : system.curves)
        e += c.weight * total_energy(c, p, lambda, delta);
    return e;
}

} // namespace

std::vector<std::vector<Vec2>> discrete_gradient(const CurveSystem& system, double p,
                                                 double lambda, double delta) {
    require_valid(system);
    if (p <= 1.0) throw InputError("gradient needs p > 1");
    std::vector<std::vector<Vec2>> grad;
    for (const DiscreteCurve& c : system.curves) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        const double w = c.weight;
        std::vector<Vec2> gc(static_cast<std::size_t>(n), Vec2(0, 0));
        const std::vector<double> phi = turning_angles(c);
        auto at = [&](std::ptrdiff_t i) -> Vec2& {
            return gc[static_cast<std::size_t>(((i % n) + n) % n)];
        };
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Vec2 e0 = c.edge(i - 1);
            const Vec2 e1 = c.edge(i);
            const double l0 = e0.norm();
            const double l1 = e1.norm();
            const double ell = 0.5 * (l0 + l1);
            const double f = phi[static_cast<std::size_t>(i)];

            // Bending g(phi_i) * ell_i^{1-p}: the angle depends on the edge
            // headings, the dual length on the edge norms.
            const double A = w * dg_of(f, p, delta) * std::pow(ell, 1.0 - p);
            const Vec2 dpsi1 = perp(e1) / (l1 * l1);
            const Vec2 dpsi0 = perp(e0) / (l0 * l0);
            at(i - 1) += A * dpsi0;
            at(i) += A * (-dpsi1 - dpsi0);
            at(i + 1) += A * dpsi1;

            const double B = w * g_of(f, p, delta) * (1.0 - p) * std::pow(ell, -p);
            const Vec2 u0 = e0 / l0;
            const Vec2 u1 = e1 / l1;
            at(i - 1) += B * (-0.5 * u0);
            at(i) += B * 0.5 * (u0 - u1);
            at(i + 1) += B * 0.5 * u1;

            // Length term of edge i.
            at(i) += -w * lambda * u1;
            at(i + 1) += w * lambda * u1;
        }
        grad.push_back(std::move(gc));
    }
    return grad;
}

namespace {

double masked_inf_norm(const std::vector<std::vector<Vec2>>& g,
                       const ConstraintSet& cs) {
    double m = 0.0;
    for (std::size_t ci = 0; ci < g.size(); ++ci)
        for (std::size_t i = 0; i < g[ci].size(); ++i)
            if (!cs.is_frozen(ci, i))
                m = std::max(m, g[ci][i].lpNorm<Eigen::Infinity>());
    return m;
}

double masked_sq_norm(const std::vector<std::vector<Vec2>>& g,
                      const ConstraintSet& cs) {
    double s = 0.0;
    for (std::size_t ci = 0; ci < g.size(); ++ci)
        for (std::size_t i = 0; i < g[ci].size(); ++i)
            if (!cs.is_frozen(ci, i)) s += g[ci][i].squaredNorm();
    return s;
}

CurveSystem stepped(const CurveSystem& cur, const std::vector<std::vector<Vec2>>& g,
                    const ConstraintSet& cs, double t) {
    CurveSystem out = cur;
    for (std::size_t ci = 0; ci < out.curves.size(); ++ci)
        for (std::size_t i = 0; i < out.curves[ci].size(); ++i)
            if (!cs.is_frozen(ci, i)) out.curves[ci].nodes[i] -= t * g[ci][i];
    return out;
}

// Respace the free nodes of every maximal free run at equal arclength along
// the current polyline, keeping frozen nodes fixed.
CurveSystem redistributed(const CurveSystem& cur, const ConstraintSet& cs) {
    CurveSystem out = cur;
    for (std::size_t ci = 0; ci < out.curves.size(); ++ci) {
        DiscreteCurve& c = out.curves[ci];
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
        std::vector<std::ptrdiff_t> fixed;
        for (std::ptrdiff_t i = 0; i < n; ++i)
            if (cs.is_frozen(ci, static_cast<std::size_t>(i))) fixed.push_back(i);
        if (fixed.empty()) {
            c = resample_arclength(c, static_cast<std::size_t>(n));
            continue;
        }
        if (static_cast<std::ptrdiff_t>(fixed.size()) == n) continue;
        const DiscreteCurve ref = cur.curves[ci];
        for (std::size_t k = 0; k < fixed.size(); ++k) {
            const std::ptrdiff_t a = fixed[k];
            const std::ptrdiff_t b = fixed[(k + 1) % fixed.size()];
            const std::ptrdiff_t gap = ((b - a) % n + n) % n;
            if (gap <= 1) continue;
            double run = 0.0;
            for (std::ptrdiff_t j = a; j != a + gap; ++j)
                run += (ref.node(j + 1) - ref.node(j)).norm();
            std::ptrdiff_t seg = a;
            double base = 0.0;
            for (std::ptrdiff_t j = 1; j < gap; ++j) {
                const double s = run * static_cast<double>(j) / static_cast<double>(gap);
                while (seg < a + gap - 1 &&
                       base + (ref.node(seg + 1) - ref.node(seg)).norm() < s) {
                    base += (ref.node(seg + 1) - ref.node(seg)).norm();
                    ++seg;
                }
                const double len = (ref.node(seg + 1) - ref.node(seg)).norm();
                const double t = std::clamp((s - base) / len, 0.0, 1.0);
                c.nodes[static_cast<std::size_t>((a + j) % n)] =
                    ref.node(seg) + t * (ref.node(seg + 1) - ref.node(seg));
            }
        }
    }
    return out;
}

} // namespace

SolveResult minimize(const CurveSystem& system, const ConstraintSet& constraints,
                     const SolveOptions& options) {
    require_valid(system);
    if (options.p <= 1.0) throw InputError("minimize needs p > 1");
    if (!constraints.frozen.empty()) {
        if (constraints.frozen.size() != system.curves.size())
            throw InputError("constraint mask count does not match the system");
        for (std::size_t ci = 0; ci < system.curves.size(); ++ci)
            if (constraints.frozen[ci].size() != system.curves[ci].size())
                throw InputError("constraint mask length does not match its curve");
    }
    const double delta = options.p < 2.0 ? options.delta : 0.0;

    SolveResult res;
    res.system = system;
    double energy = solve_energy(res.system, options.p, options.lambda, delta);

    auto grad = discrete_gradient(res.system, options.p, options.lambda, delta);
    double gnorm = masked_inf_norm(grad, constraints);
    res.trace.push_back({0, energy, gnorm, 0.0});

    double step = options.initial_step > 0.0
                      ? options.initial_step
                      : 0.1 * system_diameter(system) / std::max(gnorm, 1e-12);
    int consecutive_failures = 0;

    for (int iter = 1; iter <= options.max_iters; ++iter) {
        if (gnorm < options.grad_tol) {
            res.converged = true;
            break;
        }
        const double gsq = masked_sq_norm(grad, constraints);
        bool accepted = false;
        double t = step;
        const CurveSystem before = res.system;
        const auto grad_before = grad;
        for (int half = 0; half < 60; ++half) {
            CurveSystem cand = stepped(res.system, grad, constraints, t);
            if (validate(cand).empty() && (!options.feasible || options.feasible(cand))) {
                const double ec = solve_energy(cand, options.p, options.lambda, delta);
                if (ec <= energy - options.armijo_c * t * gsq) {
                    res.system = std::move(cand);
                    energy = ec;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!accepted) {
            if (++consecutive_failures >= 20) {
                res.warn_line_search = true;
                break;
            }
            step *= 0.5;
            continue;
        }
        consecutive_failures = 0;
        ++res.iterations;

        if (options.redistribute_every > 0 &&
            res.iterations % options.redistribute_every == 0) {
            CurveSystem red = redistributed(res.system, constraints);
            if (validate(red).empty() && (!options.feasible || options.feasible(red))) {
                const double er = solve_energy(red, options.p, options.lambda, delta);
                if (er <= energy) {
                    res.system = std::move(red);
                    energy = er;
                }
            }
        }

        grad = discrete_gradient(res.system, options.p, options.lambda, delta);
        gnorm = masked_inf_norm(grad, constraints);
        res.trace.push_back({iter, energy, gnorm, t});

        // Barzilai-Borwein trial step for the next iteration; the stiff
        // bending modes throttle a fixed step far below what the slow shape
        // modes need. Armijo backtracking keeps it safe.
        double sy = 0.0, yy = 0.0;
        for (std::size_t ci = 0; ci < grad.size(); ++ci)
            for (std::size_t i = 0; i < grad[ci].size(); ++i) {
                if (constraints.is_frozen(ci, i)) continue;
                const Vec2 s = res.system.curves[ci].nodes[i] - before.curves[ci].nodes[i];
                const Vec2 y = grad[ci][i] - grad_before[ci][i];
                sy += s.dot(y);
                yy += y.squaredNorm();
            }
        step = (sy > 0.0 && yy > 0.0) ? sy / yy : 2.0 * t;
    }
    if (!res.converged && gnorm < options.grad_tol) res.converged = true;

    res.report = system_energy(res.system, options.p, options.lambda);
    return res;
}

} // namespace elastica
