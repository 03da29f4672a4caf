// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "elastica/generators.hpp"
#include "elastica/graph.hpp"
#include "elastica/scenario.hpp"
#include "elastica/solve.hpp"
#include "elastica/winding.hpp"

using namespace elastica;

namespace {

struct Check {
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            std::cerr << "    failed: " << what << "\n";
        }
    }
    void near(double value, double target, double rel, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.10g vs %.10g (rel tol %g)",
                      what.c_str(), value, target, rel);
        expect(std::abs(value - target) <= rel * std::abs(target), buf);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CurveSystem one(DiscreteCurve c) {
    CurveSystem s;
    s.curves.push_back(std::move(c));
    return s;
}

// The shared generator suite used by criteria 3, 4 and 5.
std::vector<CurveSystem> generator_suite() {
    std::vector<CurveSystem> suite;
    suite.push_back(one(make_circle(1.0, 512)));
    suite.push_back(one(make_circle(0.5, 512)));
    suite.push_back(one(make_circle(2.0, 512)));
    suite.push_back(one(make_ellipse(1.5, 0.8, 512)));
    suite.push_back(one(make_square(2.0, 256)));
    suite.push_back(one(make_rounded_square(Vec2(0, 0), Vec2(2, 2), 0.3, 256)));
    suite.push_back(one(make_figure_eight(512)));
    suite.push_back(one(make_star_curve(1.0, {0.15, 0.08}, {0.4, 1.3}, 512)));
    suite.push_back(one(make_two_cusp_drops(256)));
    suite.push_back(make_figbm(256));
    suite.push_back(make_figure_eight_lobes(256));
    for (int k = 2; k <= 5; ++k)
        suite.push_back(one(make_circle(1.0, 256, Vec2(0, 0), true, k)));
    return suite;
}

Vec2 centroid(const CurveSystem& sys) {
    Vec2 c(0, 0);
    std::size_t n = 0;
    for (const DiscreteCurve& cv : sys.curves)
        for (const Vec2& q : cv.nodes) {
            c += q;
            ++n;
        }
    return c / static_cast<double>(n);
}

// Circular arc plus two tangent segments meeting at one corner (a teardrop
// with linearly independent one-sided tangents at the apex).
DiscreteCurve make_teardrop(std::size_t n_arc) {
    DiscreteCurve c;
    const double a0 = -M_PI / 6.0, a1 = M_PI + M_PI / 6.0 + M_PI / 2.0; // 240 degrees
    for (std::size_t i = 0; i <= n_arc; ++i) {
        const double a = a0 + (a1 - a0) * i / n_arc;
        c.nodes.emplace_back(std::cos(a), std::sin(a));
    }
    const Vec2 apex(0, -2);
    const Vec2 p_end = c.nodes.back();
    const Vec2 p_start = c.nodes.front();
    const std::size_t m = n_arc / 4;
    for (std::size_t i = 1; i < m; ++i)
        c.nodes.push_back(p_end + (apex - p_end) * (static_cast<double>(i) / m));
    c.nodes.push_back(apex);
    for (std::size_t i = 1; i < m; ++i)
        c.nodes.push_back(apex + (p_start - apex) * (static_cast<double>(i) / m));
    return c;
}

double system_energy_smoothed(const CurveSystem& sys, double p, double lambda,
                              double delta) {
    double e = 0.0;
    for (const DiscreteCurve& c : sys.curves)
        e += c.weight * total_energy(c, p, lambda, delta);
    return e;
}

std::vector<VectorField> random_bump_fields(CurveRng& rng, int count, double radius) {
    std::vector<VectorField> fields;
    for (int j = 0; j < count; ++j) {
        std::vector<double> cx(3), cy(3);
        for (int k = 0; k < 3; ++k) {
            cx[k] = rng.uniform(-1, 1);
            cy[k] = rng.uniform(-1, 1);
        }
        fields.push_back(polynomial_bump_field(
            Vec2(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)), radius, cx, cy));
    }
    return fields;
}

// ---- criteria ----

bool c01_circle_energies() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    const DiscreteCurve circ = make_circle(1.0, 2048);
    ck.near(length(circ), 2.0 * M_PI, 1e-4, "unit circle length");
    for (const double p : {1.0, 1.5, 2.0, 3.0})
        ck.near(elastic_energy(circ, p), 2.0 * M_PI, 1e-4, "unit circle E_p");
    ck.near(total_energy(circ, 2.0, 1.0), 4.0 * M_PI, 1e-4, "unit circle F_2");
    for (const double r : {0.5, 2.0})
        for (const double p : {1.0, 1.5, 2.0, 3.0})
            ck.near(elastic_energy(make_circle(r, 2048), p),
                    2.0 * M_PI * std::pow(r, 1.0 - p), 1e-3, "radius scaling E_p");
    ck.expect(seconds_since(t0) < 1.0, "runtime under 1 s");
    return ck.ok;
}

bool c02_fenchel() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    CurveRng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 16 + static_cast<std::size_t>(rng.uniform(0, 49));
        const DiscreteCurve c = random_star_curve(rng, n);
        ck.expect(total_absolute_curvature(c) >= 2.0 * M_PI - 1e-9,
                  "total curvature below 2 pi");
    }
    for (int i = 0; i < 100; ++i) {
        const DiscreteCurve c = random_convex_curve(rng, 32);
        ck.expect(std::abs(total_absolute_curvature(c) - 2.0 * M_PI) <= 1e-9,
                  "convex equality");
    }
    ck.expect(seconds_since(t0) < 10.0, "runtime under 10 s");
    return ck.ok;
}

bool c03_holder_chain() {
    Check ck;
    for (const CurveSystem& sys : generator_suite())
        for (const double p : {1.5, 2.0, 3.0})
            for (const Verdict& v : holder_chain_check(sys, p))
                ck.expect(v.pass, v.name);
    for (const double r : {0.5, 1.0, 2.0})
        for (const double p : {1.5, 2.0, 3.0}) {
            const CurveSystem circ = one(make_circle(r, 512));
            const double e1 = system_energy(circ, 1.0, 0.0).elastic;
            const double ep = system_energy(circ, p, 0.0).elastic;
            const double bound =
                std::pow(mass(circ), 1.0 - 1.0 / p) * std::pow(ep, 1.0 / p);
            ck.near(e1, bound, 1e-6, "circle equality case");
        }
    return ck.ok;
}

bool c04_density_bound() {
    Check ck;
    std::size_t total = 0;
    for (const CurveSystem& sys : generator_suite()) {
        std::vector<Vec2> pts;
        for (const DiscreteCurve& c : sys.curves)
            for (std::size_t i = 0; i < c.size(); ++i) {
                pts.push_back(c.nodes[i]);
                pts.push_back(0.5 * (c.nodes[i] + c.node(static_cast<std::ptrdiff_t>(i) + 1)));
            }
        total += pts.size();
        for (const Verdict& v : density_bound_check(sys, 2.0, pts))
            ck.expect(v.pass, v.name);
    }
    ck.expect(total >= 10000, "at least 10^4 sampled points");
    return ck.ok;
}

bool c05_monotonicity() {
    Check ck;
    {
        const CurveSystem circ = one(make_circle(1.0, 1024));
        std::vector<double> radii;
        for (int k = 1; k <= 200; ++k) radii.push_back(2.0 * k / 200.0);
        const MonotonicityProfile prof = monotonicity_profile(circ, Vec2(0, 0), radii);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (radii[i] < 1.0 - 1e-9)
                ck.expect(prof.values[i] == 0.0, "A(r) nonzero inside the circle");
            else
                ck.near(prof.values[i], 2.0 * M_PI, 0.01, "A(r) for r >= 1");
        }
    }
    for (const CurveSystem& sys : generator_suite()) {
        const auto t0 = std::chrono::steady_clock::now();
        const double rmax = 10.0 * system_diameter(sys);
        std::vector<double> radii;
        for (int k = 1; k <= 200; ++k) radii.push_back(rmax * k / 200.0);
        const MonotonicityProfile prof =
            monotonicity_profile(sys, centroid(sys), radii);
        ck.expect(prof.monotone, "A(r) not nondecreasing within tolerance");
        // The limit identity needs the curvature measure to stay spread out:
        // at a genuine corner the nodal turning vector carries 4 sin^2(phi/2)
        // against E_2's phi^2, a gap no refinement closes. Skip the limit for
        // corner generators (square, cusped drops), keep the monotone check.
        double phimax = 0.0;
        for (const DiscreteCurve& c : sys.curves)
            for (double f : turning_angles(c)) phimax = std::max(phimax, std::abs(f));
        if (phimax < 0.5)
            ck.near(prof.values.back(), prof.limit_estimate, 0.01, "A(r_max) limit");
        ck.expect(seconds_since(t0) < 5.0, "runtime under 5 s per system");
    }
    return ck.ok;
}

bool c06_first_variation() {
    Check ck;
    CurveRng rng(99);
    const std::vector<VectorField> fields = random_bump_fields(rng, 10, 4.0);
    const auto build = [](int which, std::size_t n) {
        switch (which) {
            case 0: return one(make_circle(1.0, n));
            case 1: return one(make_ellipse(1.5, 0.8, n));
            case 2: return one(make_figure_eight(n));
            default: return make_figbm(n);
        }
    };
    for (int which = 0; which < 4; ++which) {
        const double res_n = first_variation_residual(build(which, 1024), fields);
        const double res_2n = first_variation_residual(build(which, 2048), fields);
        ck.expect(res_n < 1e-2, "residual at n=1024 too large");
        ck.expect(res_n / res_2n >= 1.5, "residual not decreasing under refinement");
    }
    return ck.ok;
}

bool c07_reconstruction() {
    Check ck;
    const ReconstructionGrid disc = reconstruct_set(
        one(make_circle(1.0, 1024)), Vec2(-1.5, -1.5), Vec2(1.5, 1.5), 256, 256);
    ck.near(estimated_area(disc), M_PI, 0.02, "disc area at 256^2");

    const ReconstructionGrid as_one = reconstruct_set(
        one(make_figure_eight(1024)), Vec2(-1.8, -1.8), Vec2(1.8, 1.8), 256, 256);
    const ReconstructionGrid as_two = reconstruct_set(
        make_figure_eight_lobes(1024), Vec2(-1.8, -1.8), Vec2(1.8, 1.8), 256, 256);
    std::size_t differ = 0, comparable = 0;
    for (std::size_t i = 0; i < as_one.labels.size(); ++i) {
        if (as_one.labels[i] == CellLabel::Boundary ||
            as_two.labels[i] == CellLabel::Boundary)
            continue;
        ++comparable;
        if (as_one.labels[i] != as_two.labels[i]) ++differ;
    }
    ck.expect(comparable > 0 && differ <= comparable / 100,
              "representations disagree on more than 1% of cells");
    return ck.ok;
}

bool c08_regularity() {
    Check ck;
    ck.expect(is_regular(extract_graph(one(make_figure_eight(512)))).regular,
              "figure eight should be regular");
    ck.expect(is_regular(extract_graph(make_figbm(256))).regular,
              "cross-and-drops should be regular");

    {
        const PlanarGraph g = extract_graph(one(make_square(2.0, 64)));
        const RegularityReport rep = is_regular(g);
        ck.expect(!rep.regular && rep.infinite_relaxed_energy,
                  "square should be irregular");
        std::set<int> bad;
        for (const RegularityOffense& o : rep.offenses) bad.insert(o.vertex);
        ck.expect(bad.size() == 4 && g.vertices.size() == 4,
                  "square offenses should list the four corners");
        for (int v : bad)
            ck.expect(std::abs(std::abs(g.vertices[static_cast<std::size_t>(v)].x()) -
                               1.0) < 1e-9,
                      "offending vertex is not a corner");
    }
    {
        const CurveSystem sys = make_three_drop_junction(0.15, 1024);
        const PlanarGraph g = extract_graph(sys);
        const RegularityReport rep = is_regular(g);
        ck.expect(!rep.regular && rep.infinite_relaxed_energy,
                  "three-drop junction should be irregular");
        int junction = -1;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (g.vertices[v].norm() < 1e-9) junction = static_cast<int>(v);
        ck.expect(junction >= 0, "no vertex at the junction");
        ck.expect(!rep.offenses.empty(), "no offenses reported");
        for (const RegularityOffense& o : rep.offenses)
            ck.expect(o.vertex == junction, "offense away from the junction");

        // Vanishing first variation at the very junction that kills
        // regularity: the tangents balance even though the graph fails.
        CurveRng rng(12);
        std::vector<VectorField> local;
        for (int j = 0; j < 10; ++j) {
            std::vector<double> cx(3), cy(3);
            for (int k = 0; k < 3; ++k) {
                cx[k] = rng.uniform(-1, 1);
                cy[k] = rng.uniform(-1, 1);
            }
            local.push_back(polynomial_bump_field(Vec2(0, 0), 0.5, cx, cy));
        }
        ck.expect(first_variation_residual(sys, local) < 1e-2,
                  "junction residual too large");
    }
    return ck.ok;
}

bool c09_cusp_parity() {
    Check ck;
    {
        const CuspReport rep =
            cusp_parity_check(extract_graph(one(make_two_cusp_drops(512))));
        ck.expect(rep.applicable, "two-cusp graph should be applicable");
        ck.expect(rep.cusp_vertices.size() == 2, "expected exactly two cusps");
        ck.expect(rep.parity_even, "two cusps should be even");
    }
    CurveRng rng(91);
    int done = 0;
    while (done < 100) {
        CurveSystem sys;
        const int k = 2 + static_cast<int>(rng.uniform(0, 2));
        for (int i = 0; i < k; ++i) {
            const Vec2 ctr(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));
            const double r = rng.uniform(0.7, 1.3);
            const int w = 1 + static_cast<int>(rng.uniform(0, 3));
            sys.curves.push_back(make_circle(r, 96, ctr, true, std::min(w, 3)));
        }
        try {
            const PlanarGraph g = extract_graph(sys);
            if (!is_regular(g).regular) continue; // tangency, redraw
            const CuspReport cr = cusp_parity_check(g);
            ck.expect(cr.applicable && cr.parity_even, "random multigraph parity");
            ++done;
        } catch (const InputError&) {
            // ambiguous junction cluster; draw again
        }
    }
    {
        // one genuine corner: rejected before any cusp counting
        const PlanarGraph g = extract_graph(one(make_teardrop(256)));
        const RegularityReport rep = is_regular(g);
        ck.expect(!rep.regular, "teardrop should be irregular");
        ck.expect(!cusp_parity_check(g).applicable,
                  "teardrop cusp check should not apply");
    }
    return ck.ok;
}

bool c10_gradient_check() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    const double ps[3] = {1.5, 2.0, 3.0};
    const double lambdas[3] = {0.1, 1.0, 10.0};
    CurveRng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 12 + 2 * static_cast<std::size_t>(rng.uniform(0, 6));
        CurveSystem sys = one(trial % 2 == 0 ? random_star_curve(rng, n)
                                             : random_convex_curve(rng, n));
        sys.curves[0].weight = 1 + static_cast<int>(rng.uniform(0, 2));
        const double p = ps[trial % 3];
        const double lambda = lambdas[(trial / 3) % 3];
        const double delta = p < 2.0 ? 1e-6 : 0.0;

        const auto g = discrete_gradient(sys, p, lambda, delta);
        const double h = 1e-6 * bbox_diagonal(sys.curves[0]);
        double gmax = 0.0, dmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (int axis = 0; axis < 2; ++axis) {
                CurveSystem plus = sys, minus = sys;
                plus.curves[0].nodes[i][axis] += h;
                minus.curves[0].nodes[i][axis] -= h;
                const double fd = (system_energy_smoothed(plus, p, lambda, delta) -
                                   system_energy_smoothed(minus, p, lambda, delta)) /
                                  (2.0 * h);
                dmax = std::max(dmax, std::abs(fd - g[0][i][axis]));
            }
            gmax = std::max(gmax, g[0][i].lpNorm<Eigen::Infinity>());
        }
        ck.expect(dmax / gmax < 1e-6, "finite-difference mismatch");
    }
    ck.expect(seconds_since(t0) < 30.0, "runtime under 30 s");
    return ck.ok;
}

bool c11_free_minimization() {
    Check ck;
    struct Case {
        double p, lambda;
    };
    for (const Case cs : {Case{2.0, 1.0}, Case{2.0, 4.0}, Case{3.0, 1.0}}) {
        const auto t0 = std::chrono::steady_clock::now();
        SolveOptions opt;
        opt.p = cs.p;
        opt.lambda = cs.lambda;
        opt.max_iters = 20000;
        const CurveSystem start = one(make_ellipse(1.6, 0.8, 48));
        const SolveResult res = minimize(start, ConstraintSet::all_free(start), opt);

        const double rstar = std::pow((cs.p - 1.0) / cs.lambda, 1.0 / cs.p);
        const double fstar = 2.0 * M_PI * cs.lambda * rstar +
                             2.0 * M_PI * std::pow(rstar, 1.0 - cs.p);
        ck.near(res.report.total, fstar, 0.01, "optimal energy");

        const Vec2 c = centroid(res.system);
        double rmean = 0.0;
        for (const Vec2& q : res.system.curves[0].nodes) rmean += (q - c).norm();
        rmean /= static_cast<double>(res.system.curves[0].size());
        ck.near(rmean, rstar, 0.02, "optimal radius");
        ck.expect(seconds_since(t0) < 60.0, "runtime under 60 s per case");
    }
    return ck.ok;
}

bool c12_inpainting() {
    Check ck;
    for (const double lambda : {0.05, 0.2}) {
        const ScenarioReport rep = inpaint_scenario(lambda, 2.0, 256);
        double cross_total = 0.0;
        for (const CandidateResult& c : rep.candidates)
            if (c.name == "cross") {
                ck.near(c.energy, 4.0 * lambda, 0.02, "cross energy inside the disc");
                cross_total = c.total;
            }
        ck.expect(rep.winner == "cross", "cross should win");
        for (const CandidateResult& c : rep.candidates)
            if (c.name != "cross")
                ck.expect(c.total > cross_total, c.name + " should lose to the cross");
    }
    return ck.ok;
}

bool c13_bm_comparison() {
    Check ck;
    const ScenarioReport rep = bm_compare(1024);
    ck.expect(rep.winner == "cross", "cross should win");
    for (const CandidateResult& c : rep.candidates) {
        if (c.name == "cross")
            ck.near(c.energy, 8.0, 0.02, "cross contribution inside the disc");
        else if (c.name.rfind("arc", 0) == 0)
            ck.expect(c.energy >= M_PI * 0.98, c.name + " below pi");
        else
            ck.expect(c.energy >= 2.0 * M_PI * 0.98, c.name + " below 2 pi");
    }
    return ck.ok;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"circle energies", c01_circle_energies},
        {"Fenchel suite", c02_fenchel},
        {"Holder chain", c03_holder_chain},
        {"density bound", c04_density_bound},
        {"monotonicity", c05_monotonicity},
        {"first variation", c06_first_variation},
        {"parity reconstruction", c07_reconstruction},
        {"graph regularity", c08_regularity},
        {"cusp parity", c09_cusp_parity},
        {"gradient check", c10_gradient_check},
        {"free minimization", c11_free_minimization},
        {"inpainting scenario", c12_inpainting},
        {"connection comparison", c13_bm_comparison},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        try {
            ok = criteria[i].second();
        } catch (const std::exception& e) {
            std::cerr << "    exception: " << e.what() << "\n";
        }
        if (!ok) ++failures;
        std::printf("criterion %2zu (%s): %s\n", i + 1, criteria[i].first.c_str(),
                    ok ? "PASS" : "FAIL");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
