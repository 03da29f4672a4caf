#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "elastica/generators.hpp"
#include "elastica/system.hpp"

using namespace elastica;

namespace {

CurveSystem one(const DiscreteCurve& c) { return CurveSystem{{c}}; }

// Independent ellipse quadrature: integrals of |k| and k^2 with respect to
// arclength, midpoint rule in the parameter.
void ellipse_quadrature(double a, double b, double& e1, double& e2) {
    const int m = 1 << 16;
    e1 = 0.0;
    e2 = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * M_PI * (j + 0.5) / m;
        const double g = std::sqrt(a * a * std::sin(t) * std::sin(t) +
                                   b * b * std::cos(t) * std::cos(t));
        const double k = a * b / (g * g * g);
        e1 += k * g * (2.0 * M_PI / m);
        e2 += k * k * g * (2.0 * M_PI / m);
    }
}

} // namespace

TEST_CASE("mass and energy add over components") {
    CurveSystem sys;
    sys.curves.push_back(make_circle(1.0, 1024, Vec2(-3, 0)));
    sys.curves.push_back(make_circle(1.0, 1024, Vec2(3, 0)));
    const EnergyReport rep = system_energy(sys, 2.0);
    CHECK(std::abs(rep.mass - 4.0 * M_PI) / (4.0 * M_PI) < 1e-4);
    CHECK(std::abs(rep.elastic - 4.0 * M_PI) / (4.0 * M_PI) < 1e-4);
    CHECK(rep.per_curve.size() == 2);
    CHECK(rep.total == doctest::Approx(rep.mass + rep.elastic).epsilon(1e-12));
}

TEST_CASE("weight-2 curve equals two coincident copies") {
    DiscreteCurve c = make_circle(1.3, 256);
    c.weight = 2;
    CurveSystem doubled = one(c);
    c.weight = 1;
    CurveSystem copies;
    copies.curves = {c, c};
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const EnergyReport ra = system_energy(doubled, p);
        const EnergyReport rb = system_energy(copies, p);
        CHECK(ra.mass == doctest::Approx(rb.mass).epsilon(1e-12));
        CHECK(ra.elastic == doctest::Approx(rb.elastic).epsilon(1e-12));
    }
}

TEST_CASE("cross-and-drops system carries energy 8 inside the unit ball") {
    const CurveSystem sys = make_figbm(1024);
    const double inside = energy_in_ball(sys, Vec2(0, 0), 1.0, 2.0, 1.0);
    CHECK(std::abs(inside - 8.0) / 8.0 < 0.02);
}

TEST_CASE("multiplicity counts passes") {
    CHECK(multiplicity_at(one(make_circle(1.0, 256)), Vec2(1, 0), 1e-3) == 1);
    CHECK(multiplicity_at(one(make_figure_eight(512)), Vec2(0, 0), 1e-3) == 2);

    const CurveSystem bm = make_figbm(1024);
    // Generic cross points carry two passes of the doubly-run diameter.
    CHECK(multiplicity_at(bm, Vec2(0.5, 0), 1e-3) == 2);
    CHECK(multiplicity_at(bm, Vec2(0, -0.5), 1e-3) == 2);
    // At the exact center both diameters meet: four passes in total.
    CHECK(multiplicity_at(bm, Vec2(0, 0), 1e-3) == 4);
    // Petal boundaries are simple; probe the cap apex of the east petal.
    CHECK(multiplicity_at(bm, Vec2(1.0 + 0.75 * std::sqrt(3.0), 0.75), 1e-2) == 1);
    CHECK(multiplicity_at(bm, Vec2(0, 0.5), 1e-3) == 2);
    CHECK(multiplicity_at(bm, Vec2(5, 5), 1e-3) == 0);

    DiscreteCurve w3 = make_circle(1.0, 256);
    w3.weight = 3;
    CHECK(multiplicity_at(one(w3), Vec2(1, 0), 1e-3) == 3);
}

TEST_CASE("density bound") {
    const CurveSystem circ = one(make_circle(1.0, 512));
    for (const Verdict& v : density_bound_check(circ, 2.0, {Vec2(1, 0), Vec2(0, -1)})) {
        CHECK(v.pass);
        CHECK(v.lhs == 1.0);
        CHECK(v.rhs == doctest::Approx(M_PI).epsilon(1e-9));
    }

    const DiscreteCurve eight = make_figure_eight(512);
    // Oracle: direct turning-angle sum of the built polyline.
    double tac = 0.0;
    {
        const std::size_t n = eight.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e0 = eight.nodes[i] - eight.nodes[(i + n - 1) % n];
            const Vec2 e1 = eight.nodes[(i + 1) % n] - eight.nodes[i];
            tac += std::abs(std::atan2(cross2(e0, e1), e0.dot(e1)));
        }
    }
    const auto verdicts = density_bound_check(one(eight), 2.0, {Vec2(0, 0)});
    CHECK(verdicts.size() == 1);
    CHECK(verdicts[0].lhs == 2.0);
    CHECK(verdicts[0].rhs == doctest::Approx(tac / 2.0).epsilon(1e-12));
    CHECK(verdicts[0].pass);

    for (int k = 1; k <= 5; ++k) {
        CurveSystem sys;
        for (int j = 0; j < k; ++j) sys.curves.push_back(make_circle(1.0, 256));
        const auto vs = density_bound_check(sys, 2.0, {Vec2(1, 0)});
        CHECK(vs[0].lhs == static_cast<double>(k));
        CHECK(vs[0].rhs == doctest::Approx(k * M_PI).epsilon(1e-9));
        CHECK(vs[0].pass);
    }
}

TEST_CASE("Holder chain verdicts") {
    const auto circ = holder_chain_check(one(make_circle(1.0, 4096)), 2.0);
    CHECK(circ.size() == 2);
    CHECK(circ[0].pass);
    CHECK(circ[1].pass);
    CHECK(std::abs(circ[1].lhs - circ[1].rhs) < 1e-6); // equality for circles

    double e1, e2;
    ellipse_quadrature(3.0, 1.0, e1, e2);
    const CurveSystem ell = one(make_ellipse(3.0, 1.0, 4096));
    const EnergyReport rep = system_energy(ell, 2.0);
    CHECK(std::abs(rep.elastic - e2) / e2 < 1e-3);
    const double lhs = e1;
    const double rhs = std::sqrt(rep.mass) * std::sqrt(rep.elastic);
    CHECK(lhs < rhs - 0.5); // strict margin for the 3:1 ellipse
    CHECK(holder_chain_check(ell, 2.0)[1].pass);

    const auto c4 = holder_chain_check(one(make_circle(4.0, 4096)), 3.0);
    // 2 <= 2pi <= (8pi)^{2/3} (2pi/16)^{1/3} = 2pi
    CHECK(c4[0].pass);
    CHECK(c4[1].lhs == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
    CHECK(c4[1].rhs == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
    CHECK(c4[1].pass);
}

TEST_CASE("first variation residual vanishes under refinement") {
    // Circle against the radial bump field.
    const VectorField radial = radial_bump_field(3.0);
    CHECK(first_variation_residual(one(make_circle(1.0, 1024)), {radial}) < 1e-3);

    // Nearly constant field: wide bump over the whole system.
    const VectorField nearly_const =
        polynomial_bump_field(Vec2(0, 0), 50.0, {0.7}, {-0.3});
    CHECK(first_variation_residual(one(make_figure_eight(512)), {nearly_const}) < 1e-3);

    // Random polynomial-times-bump fields on the cross-and-drops system.
    CurveRng rng(99);
    std::vector<VectorField> fields;
    for (int j = 0; j < 10; ++j) {
        std::vector<double> cx(3), cy(3);
        for (int k = 0; k < 3; ++k) {
            cx[k] = rng.uniform(-1, 1);
            cy[k] = rng.uniform(-1, 1);
        }
        fields.push_back(polynomial_bump_field(
            Vec2(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)), 4.0, cx, cy));
    }
    const double res_n = first_variation_residual(make_figbm(1024), fields);
    const double res_2n = first_variation_residual(make_figbm(2048), fields);
    CHECK(res_n < 1e-2);
    CHECK(res_n / res_2n >= 1.5);
}

TEST_CASE("monotonicity profile of the unit circle") {
    const CurveSystem circ = one(make_circle(1.0, 1024));
    std::vector<double> radii;
    for (int k = 1; k <= 200; ++k) radii.push_back(0.1 * k + 0.003);
    const MonotonicityProfile prof = monotonicity_profile(circ, Vec2(0, 0), radii);
    CHECK(prof.monotone);
    CHECK(prof.limit_estimate == doctest::Approx(2.0 * M_PI).epsilon(1e-4));
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0.999)
            CHECK(std::abs(prof.values[i]) < 1e-9);
        else if (radii[i] > 1.001)
            CHECK(prof.values[i] == doctest::Approx(2.0 * M_PI).epsilon(0.01));
    }

    // Off-center: the limit does not depend on the center.
    const MonotonicityProfile off =
        monotonicity_profile(circ, Vec2(5, 0), {1.0, 5.0, 20.0, 60.0});
    CHECK(off.values.back() == doctest::Approx(2.0 * M_PI).epsilon(0.01));

    CurveSystem two;
    two.curves.push_back(make_circle(1.0, 512, Vec2(-2, 0)));
    two.curves.push_back(make_circle(1.0, 512, Vec2(2, 0)));
    const MonotonicityProfile pair =
        monotonicity_profile(two, Vec2(0.3, 0.1), {1.0, 10.0, 80.0});
    CHECK(pair.limit_estimate == doctest::Approx(4.0 * M_PI).epsilon(1e-4));
    CHECK(pair.values.back() == doctest::Approx(4.0 * M_PI).epsilon(0.01));
}

TEST_CASE("monotonicity holds across generators") {
    std::vector<CurveSystem> systems;
    systems.push_back(one(make_circle(1.0, 512)));
    systems.push_back(one(make_ellipse(2.0, 1.0, 512)));
    systems.push_back(one(make_figure_eight(512)));
    systems.push_back(make_figbm(512));
    systems.push_back(one(make_rounded_square(Vec2(-1, -1), Vec2(1, 1), 0.3, 512)));
    CurveRng rng(3);
    systems.push_back(one(random_star_curve(rng, 256)));

    for (const CurveSystem& sys : systems) {
        const double d = system_diameter(sys);
        std::vector<double> radii;
        for (int k = 1; k <= 200; ++k)
            radii.push_back(10.0 * d * k / 200.0 + 1e-4);
        const MonotonicityProfile prof =
            monotonicity_profile(sys, Vec2(0.05, -0.02), radii);
        CHECK(prof.monotone);
        CHECK(prof.values.back() ==
              doctest::Approx(prof.limit_estimate).epsilon(0.01));
    }
}

TEST_CASE("profile input validation") {
    const CurveSystem circ = one(make_circle(1.0, 64));
    CHECK_THROWS_AS(monotonicity_profile(circ, Vec2(0, 0), {1.0, 0.5}), InputError);
    CHECK_THROWS_AS(monotonicity_profile(circ, Vec2(0, 0), {-1.0}), InputError);
    CHECK_THROWS_AS(monotonicity_profile(circ, Vec2(0, 0), {1.0, 2.0}, 3.0), InputError);
    CHECK_THROWS_AS(system_energy(CurveSystem{}, 2.0), InputError);
}
