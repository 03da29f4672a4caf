#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "elastica/generators.hpp"
#include "elastica/graph.hpp"

using namespace elastica;

namespace {

double chain_len(const std::vector<Vec2>& chain, bool closed) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s += (chain[i + 1] - chain[i]).norm();
    if (closed && chain.size() > 1) s += (chain.front() - chain.back()).norm();
    return s;
}

double graph_mass(const PlanarGraph& g) {
    double s = 0.0;
    for (const GraphEdge& e : g.edges)
        s += e.multiplicity * chain_len(e.chain, e.a < 0);
    return s;
}

int nearest_vertex(const PlanarGraph& g, const Vec2& p) {
    int best = -1;
    double bd = 1e300;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const double d = (g.vertices[v] - p).norm();
        if (d < bd) {
            bd = d;
            best = static_cast<int>(v);
        }
    }
    return best;
}

std::size_t count_loops(const PlanarGraph& g) {
    std::size_t k = 0;
    for (const GraphEdge& e : g.edges)
        if (e.a < 0) ++k;
    return k;
}

} // namespace

TEST_CASE("corner detection") {
    CHECK(detect_corners(make_circle(1.0, 64)).empty());
    CHECK(detect_corners(make_star_curve(1.0, {0.1, 0.05}, {0.0, 1.0}, 128)).empty());
    CHECK(detect_corners(make_rounded_square(Vec2(0, 0), Vec2(4, 4), 0.5, 256)).empty());

    const DiscreteCurve sq = make_square(2.0, 64);
    const std::vector<std::size_t> corners = detect_corners(sq);
    REQUIRE(corners.size() == 4);
    const std::vector<double> phi = turning_angles(sq);
    for (std::size_t i : corners)
        CHECK(std::abs(phi[i]) == doctest::Approx(M_PI / 2).epsilon(1e-9));
}

TEST_CASE("sampling spikes on a smooth curve are not corners") {
    // Circle sampled with two adjacent parameter gaps of 0.3 rad; the node
    // between them has turning angle 0.3, above the corner threshold, but
    // equal-arclength refinement flattens it out.
    const std::size_t n = 64;
    DiscreteCurve c;
    const double rest = (2.0 * M_PI - 0.6) / static_cast<double>(n - 2);
    double t = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        c.nodes.push_back(Vec2(std::cos(t), std::sin(t)));
        t += (k == 20 || k == 21) ? 0.3 : rest;
    }
    const std::vector<double> phi = turning_angles(c);
    CHECK(std::abs(phi[21]) > kThetaCorner);
    CHECK(detect_corners(c).empty());

    const PlanarGraph g = extract_graph(CurveSystem{{c}});
    CHECK(g.vertices.empty());
    CHECK(g.edges.size() == 1);
    CHECK(g.edges[0].a == -1);
}

TEST_CASE("disjoint circles stay separate loops") {
    CurveSystem sys;
    sys.curves.push_back(make_circle(1.0, 96, Vec2(-3, 0)));
    sys.curves.push_back(make_circle(1.0, 96, Vec2(3, 0)));
    const PlanarGraph g = extract_graph(sys);
    CHECK(g.vertices.empty());
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].multiplicity == 1);
    CHECK(g.edges[1].multiplicity == 1);
    CHECK(graph_mass(g) == doctest::Approx(mass(sys)).epsilon(1e-6));
}

TEST_CASE("weighted circle keeps its weight") {
    const PlanarGraph g = extract_graph(CurveSystem{{make_circle(2.0, 128, Vec2(0, 0), true, 3)}});
    CHECK(g.vertices.empty());
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].multiplicity == 3);
}

TEST_CASE("coincident copies merge into a doubled loop") {
    const DiscreteCurve c = make_circle(1.0, 96);
    const PlanarGraph g = extract_graph(CurveSystem{{c, c}});
    CHECK(g.vertices.empty());
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].a == -1);
    CHECK(g.edges[0].multiplicity == 2);
    CHECK(chain_len(g.edges[0].chain, true) ==
          doctest::Approx(length(c)).epsilon(1e-3));
}

TEST_CASE("figure eight: one junction, two simple loops") {
    const CurveSystem sys{{make_figure_eight(512)}};
    const PlanarGraph g = extract_graph(sys);
    REQUIRE(g.vertices.size() == 1);
    CHECK(g.vertices[0].norm() < 1e-9);
    REQUIRE(g.edges.size() == 2);
    for (const GraphEdge& e : g.edges) {
        CHECK(e.a == 0);
        CHECK(e.b == 0);
        CHECK(e.multiplicity == 1);
    }
    CHECK(graph_mass(g) == doctest::Approx(mass(sys)).epsilon(1e-6));

    const VertexDirectionalReport rep = directional_densities(g, 0);
    REQUIRE(rep.directions.size() == 2);
    CHECK(rep.local_density == 4);
    for (const DirectionEntry& d : rep.directions) {
        CHECK(d.rho_plus == 1);
        CHECK(d.rho_minus == 1);
    }
    CHECK(is_regular(g).regular);

    // Halved graph is empty: no cusps, even parity.
    const CuspReport cr = cusp_parity_check(g);
    CHECK(cr.applicable);
    CHECK(cr.cusp_vertices.empty());
    CHECK(cr.parity_even);
}

TEST_CASE("square graph is irregular at every corner") {
    const PlanarGraph g = extract_graph(CurveSystem{{make_square(2.0, 64)}});
    REQUIRE(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 4);
    for (const GraphEdge& e : g.edges) {
        CHECK(e.a >= 0);
        CHECK(e.b >= 0);
        CHECK(e.a != e.b);
        CHECK(chain_len(e.chain, false) == doctest::Approx(2.0).epsilon(1e-6));
    }
    for (int v = 0; v < 4; ++v) {
        const VertexDirectionalReport rep = directional_densities(g, v);
        REQUIRE(rep.directions.size() == 2);
        CHECK(rep.local_density == 2);
        for (const DirectionEntry& d : rep.directions)
            CHECK(d.rho_plus + d.rho_minus == 1);
    }
    const RegularityReport rr = is_regular(g);
    CHECK(!rr.regular);
    CHECK(rr.infinite_relaxed_energy);
    CHECK(rr.offenses.size() == 8);
    CHECK(!cusp_parity_check(g).applicable);
}

TEST_CASE("two-cusp drops: doubled axis, two odd tips") {
    const CurveSystem sys{{make_two_cusp_drops(512)}};
    const PlanarGraph g = extract_graph(sys);
    REQUIRE(g.vertices.size() == 2);
    std::vector<Vec2> vs = g.vertices;
    std::sort(vs.begin(), vs.end(), [](const Vec2& a, const Vec2& b) { return a.x() < b.x(); });
    CHECK((vs[0] - Vec2(-1, 0)).norm() < 1e-9);
    CHECK((vs[1] - Vec2(1, 0)).norm() < 1e-9);

    REQUIRE(g.edges.size() == 3);
    std::size_t petals = 0, axes = 0;
    for (const GraphEdge& e : g.edges) {
        if (e.a == e.b) {
            ++petals;
            CHECK(e.multiplicity == 1);
        } else {
            ++axes;
            CHECK(e.multiplicity == 2);
            CHECK(chain_len(e.chain, false) == doctest::Approx(2.0).epsilon(1e-6));
        }
    }
    CHECK(petals == 2);
    CHECK(axes == 1);
    CHECK(graph_mass(g) == doctest::Approx(mass(sys)).epsilon(1e-3));

    CHECK(is_regular(g).regular);
    const CuspReport cr = cusp_parity_check(g);
    REQUIRE(cr.applicable);
    CHECK(cr.cusp_vertices.size() == 2);
    CHECK(cr.parity_even);
}

TEST_CASE("cross-and-drops graph structure") {
    const CurveSystem sys = make_figbm(1024);
    const PlanarGraph g = extract_graph(sys);
    REQUIRE(g.vertices.size() == 5);
    const int center = nearest_vertex(g, Vec2(0, 0));
    CHECK(g.vertices[static_cast<std::size_t>(center)].norm() < 1e-9);
    for (const Vec2 tip : {Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1), Vec2(0, -1)}) {
        const int v = nearest_vertex(g, tip);
        CHECK((g.vertices[static_cast<std::size_t>(v)] - tip).norm() < 1e-9);
    }

    REQUIRE(g.edges.size() == 8);
    std::size_t petals = 0, axes = 0;
    for (const GraphEdge& e : g.edges) {
        if (e.a == e.b) {
            ++petals;
            CHECK(e.multiplicity == 1);
        } else {
            ++axes;
            CHECK(e.multiplicity == 2);
            CHECK((e.a == center) != (e.b == center));
            CHECK(chain_len(e.chain, false) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
    CHECK(petals == 4);
    CHECK(axes == 4);
    CHECK(graph_mass(g) == doctest::Approx(mass(sys)).epsilon(1e-3));

    // Center: two axis lines, both balanced 2/2. Tips: one line, petal ends
    // against the doubled axis end.
    const VertexDirectionalReport crep = directional_densities(g, center);
    REQUIRE(crep.directions.size() == 2);
    CHECK(crep.local_density == 8);
    for (const DirectionEntry& d : crep.directions) {
        CHECK(d.rho_plus == 2);
        CHECK(d.rho_minus == 2);
    }
    const int east = nearest_vertex(g, Vec2(1, 0));
    const VertexDirectionalReport trep = directional_densities(g, east);
    REQUIRE(trep.directions.size() == 1);
    CHECK(trep.local_density == 4);
    CHECK(trep.directions[0].rho_plus == 2);
    CHECK(trep.directions[0].rho_minus == 2);

    CHECK(is_regular(g).regular);
    const CuspReport cr = cusp_parity_check(g);
    REQUIRE(cr.applicable);
    // Halving drops the petals and leaves four simple half-axes, so the four
    // tips carry odd density while the center stays even.
    CHECK(cr.cusp_vertices.size() == 4);
    CHECK(std::find(cr.cusp_vertices.begin(), cr.cusp_vertices.end(), center) ==
          cr.cusp_vertices.end());
    CHECK(cr.parity_even);
}

TEST_CASE("three-drop junction: six unbalanced directions") {
    const CurveSystem sys = make_three_drop_junction(0.15, 256);
    const PlanarGraph g = extract_graph(sys);
    const int v0 = nearest_vertex(g, Vec2(0, 0));
    REQUIRE(v0 >= 0);
    CHECK(g.vertices[static_cast<std::size_t>(v0)].norm() < 1e-9);

    const VertexDirectionalReport rep = directional_densities(g, v0);
    REQUIRE(rep.directions.size() == 6);
    CHECK(rep.local_density == 6);
    for (const DirectionEntry& d : rep.directions) {
        CHECK(d.rho_plus + d.rho_minus == 1);
        CHECK(d.rho_plus * d.rho_minus == 0);
    }
    const RegularityReport rr = is_regular(g);
    CHECK(!rr.regular);
    CHECK(rr.infinite_relaxed_energy);
    std::size_t at_origin = 0;
    for (const RegularityOffense& o : rr.offenses)
        if (o.vertex == v0) ++at_origin;
    CHECK(at_origin == 6);
}

TEST_CASE("graph is stable under node rotation and rescaling") {
    DiscreteCurve c = make_figure_eight(512);
    const PlanarGraph g0 = extract_graph(CurveSystem{{c}});

    std::rotate(c.nodes.begin(), c.nodes.begin() + 137, c.nodes.end());
    const PlanarGraph g1 = extract_graph(CurveSystem{{c}});
    CHECK(g1.vertices.size() == g0.vertices.size());
    CHECK(g1.edges.size() == g0.edges.size());

    for (Vec2& q : c.nodes) q *= 40.0;
    const PlanarGraph g2 = extract_graph(CurveSystem{{c}});
    CHECK(g2.vertices.size() == g0.vertices.size());
    CHECK(g2.edges.size() == g0.edges.size());
    CHECK(graph_mass(g2) == doctest::Approx(40.0 * graph_mass(g0)).epsilon(1e-6));
}

TEST_CASE("direction clustering tolerance and ambiguity") {
    PlanarGraph g;
    g.vertices.push_back(Vec2(0, 0));
    auto stub = [&](double angle) {
        GraphEdge e;
        e.a = 0;
        e.b = -2; // only end a incident; keep b off this vertex
        e.chain = {Vec2(0, 0), Vec2(std::cos(angle), std::sin(angle))};
        e.tangent_a = Vec2(std::cos(angle), std::sin(angle));
        e.tangent_b = -e.tangent_a;
        return e;
    };
    g.edges.push_back(stub(0.0));
    g.edges.push_back(stub(0.004));
    CHECK(directional_densities(g, 0).directions.size() == 1);

    g.edges[1] = stub(0.015);
    CHECK_THROWS_AS(directional_densities(g, 0), InputError);

    g.edges[1] = stub(0.5);
    CHECK(directional_densities(g, 0).directions.size() == 2);
}

TEST_CASE("random crossing circles: regular, even cusp count") {
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
            if (!is_regular(g).regular) continue; // near-tangent contact, redraw
            const CuspReport cr = cusp_parity_check(g);
            REQUIRE(cr.applicable);
            CHECK(cr.parity_even);
            ++done;
        } catch (const InputError&) {
            // ambiguous junction or direction clustering; draw again
        }
    }
}
