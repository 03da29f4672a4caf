#include "elastica/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elastica/generators.hpp"
#include "elastica/path.hpp"

namespace elastica {

namespace {

// Boundary of the rounded square [0,10]^2 from (1,0) to (0,1), the long way
// around. The origin corner stays sharp; the unit disc hides it.
std::vector<PathPiece> outside_arc(double rho) {
    std::vector<PathPiece> ps;
    ps.push_back(segment_piece(Vec2(1, 0), Vec2(10 - rho, 0)));
    ps.push_back(arc_piece(Vec2(10 - rho, rho), rho, -M_PI / 2, M_PI / 2));
    ps.push_back(segment_piece(Vec2(10, rho), Vec2(10, 10 - rho)));
    ps.push_back(arc_piece(Vec2(10 - rho, 10 - rho), rho, 0.0, M_PI / 2));
    ps.push_back(segment_piece(Vec2(10 - rho, 10), Vec2(rho, 10)));
    ps.push_back(arc_piece(Vec2(rho, 10 - rho), rho, M_PI / 2, M_PI / 2));
    ps.push_back(segment_piece(Vec2(0, 10 - rho), Vec2(0, 1)));
    return ps;
}

std::vector<PathPiece> reversed_pieces(const std::vector<PathPiece>& ps) {
    std::vector<PathPiece> out;
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        const PathPiece p = *it;
        out.push_back({p.len, [p](double s) -> Vec2 { return p.at(p.len - s); }});
    }
    return out;
}

std::vector<PathPiece> negated_pieces(const std::vector<PathPiece>& ps) {
    std::vector<PathPiece> out;
    for (const PathPiece& p : ps)
        out.push_back({p.len, [p](double s) -> Vec2 { return -p.at(s); }});
    return out;
}

void append_run(std::vector<Vec2>& nodes, const std::vector<PathPiece>& ps,
                std::size_t n) {
    const std::vector<Vec2> pts = sample_path_open(ps, n);
    std::size_t k0 = 0;
    if (!nodes.empty() && (pts.front() - nodes.back()).norm() < 1e-12) k0 = 1;
    for (std::size_t k = k0; k < pts.size(); ++k) nodes.push_back(pts[k]);
}

void close_curve(std::vector<Vec2>& nodes) {
    if (nodes.size() > 1 && (nodes.front() - nodes.back()).norm() < 1e-12)
        nodes.pop_back();
}

CurveSystem cross_candidate(double rho, std::size_t n_out, std::size_t n_conn) {
    // One closed curve: around square one, straight down through the origin,
    // around square two, straight back through the origin.
    std::vector<Vec2> nodes;
    append_run(nodes, outside_arc(rho), n_out);
    append_run(nodes, {segment_piece(Vec2(0, 1), Vec2(0, -1))}, n_conn);
    append_run(nodes, reversed_pieces(negated_pieces(outside_arc(rho))), n_out);
    append_run(nodes, {segment_piece(Vec2(-1, 0), Vec2(1, 0))}, n_conn);
    close_curve(nodes);
    DiscreteCurve c;
    c.nodes = std::move(nodes);
    return CurveSystem{{c}};
}

CurveSystem detour_candidate(double rho, std::size_t n_out, std::size_t n_conn) {
    // Each square closes on its own by cutting the hidden corner with a
    // tangent arc bulging toward the origin.
    std::vector<Vec2> nodes;
    append_run(nodes, outside_arc(rho), n_out);
    append_run(nodes, {arc_piece(Vec2(1, 1), 1.0, M_PI, M_PI / 2)}, n_conn);
    close_curve(nodes);
    DiscreteCurve cp;
    cp.nodes = std::move(nodes);
    DiscreteCurve cm = cp;
    for (Vec2& q : cm.nodes) q = -q;
    return CurveSystem{{cp, cm}};
}

CurveSystem return_candidate(double rho, std::size_t n_out, std::size_t n_petal) {
    // Each endpoint turns back onto itself with a drop loop inside the disc;
    // the outside boundary is traversed twice.
    std::vector<Vec2> nodes;
    append_run(nodes, outside_arc(rho), n_out);
    for (const Vec2& q : petal_points(Vec2(0, 1), Vec2(0, -1), 0.3, n_petal))
        nodes.push_back(q);
    nodes.push_back(Vec2(0, 1));
    append_run(nodes, reversed_pieces(outside_arc(rho)), n_out);
    for (const Vec2& q : petal_points(Vec2(1, 0), Vec2(-1, 0), 0.3, n_petal))
        nodes.push_back(q);
    close_curve(nodes);
    DiscreteCurve cp;
    cp.nodes = std::move(nodes);
    DiscreteCurve cm = cp;
    for (Vec2& q : cm.nodes) q = -q;
    return CurveSystem{{cp, cm}};
}

CandidateResult price_inpaint(const std::string& name, const CurveSystem& sys,
                              double lambda, double p) {
    ConstraintSet cs = ConstraintSet::freeze_outside_disc(sys, Vec2(0, 0), 1.0 - 1e-9);
    SolveOptions opt;
    opt.p = p;
    opt.lambda = lambda;
    opt.max_iters = 4000;
    opt.grad_tol = 1e-8;
    const auto masks = cs.frozen;
    opt.feasible = [masks](const CurveSystem& s) {
        for (std::size_t ci = 0; ci < s.curves.size(); ++ci)
            for (std::size_t i = 0; i < s.curves[ci].size(); ++i)
                if (!masks[ci][i] && s.curves[ci].nodes[i].norm() > 1.0 + 1e-9)
                    return false;
        return true;
    };
    const SolveResult res = minimize(sys, cs, opt);

    CandidateResult out;
    out.name = name;
    out.bending = energy_in_ball(res.system, Vec2(0, 0), 1.0, p, 0.0);
    out.length = energy_in_ball(res.system, Vec2(0, 0), 1.0, p, 1.0) - out.bending;
    out.energy = lambda * out.length + out.bending;
    out.total = out.energy;
    out.warn = res.warn_line_search;
    return out;
}

} // namespace

ScenarioReport inpaint_scenario(double lambda, double p, std::size_t resolution,
                                double corner_radius) {
    if (lambda <= 0.0 || lambda >= M_PI / 2)
        throw InputError("inpainting weight must lie in (0, pi/2)");
    if (p <= 1.0) throw InputError("inpainting needs p > 1");
    if (resolution < 64) throw InputError("inpainting needs resolution >= 64");
    if (corner_radius <= 0.0 || corner_radius >= 5.0)
        throw InputError("corner radius must lie in (0, 5)");

    const std::size_t n_out = resolution;
    const std::size_t n_conn = std::max<std::size_t>(resolution / 4, 16);
    const std::size_t n_petal = std::max<std::size_t>(resolution / 8, 24);

    ScenarioReport rep;
    rep.p = p;
    rep.lambda = lambda;
    rep.candidates.push_back(price_inpaint(
        "cross", cross_candidate(corner_radius, n_out, n_conn), lambda, p));
    rep.candidates.push_back(price_inpaint(
        "detour", detour_candidate(corner_radius, n_out, n_conn), lambda, p));
    rep.candidates.push_back(price_inpaint(
        "return", return_candidate(corner_radius, n_out, n_petal), lambda, p));

    const auto best = std::min_element(
        rep.candidates.begin(), rep.candidates.end(),
        [](const CandidateResult& a, const CandidateResult& b) { return a.total < b.total; });
    rep.winner = best->name;

    // Where the straight cross (free length 4, zero bending) would stop
    // winning if the optimized competitor geometries were reused as-is.
    double crossover = std::numeric_limits<double>::infinity();
    for (const CandidateResult& c : rep.candidates) {
        if (c.name == "cross" || c.length >= 4.0) continue;
        crossover = std::min(crossover, c.bending / (4.0 - c.length));
    }
    rep.crossover_lambda = crossover;
    rep.notes.push_back(
        "ranking covers the constructed candidate classes only, not every "
        "measurable completion");
    rep.notes.push_back(
        "crossover estimate reuses each optimized competitor geometry at the "
        "requested lambda");
    return rep;
}

namespace {

struct BmEmbed {
    CurveSystem sys;
    ConstraintSet cs;
    std::size_t ia = 0; // node at (1,0)
    std::size_t ib = 0; // node at (0,1)
};

// Close an open connection into a loop with frozen tangent tails and a far
// frozen return path, so only the connection's interior nodes move.
BmEmbed embed_arc(const std::vector<PathPiece>& init, std::size_t n_arc) {
    BmEmbed em;
    std::vector<Vec2> nodes = sample_path_open({segment_piece(Vec2(1.5, 0), Vec2(1, 0))}, 9);
    em.ia = nodes.size() - 1;
    append_run(nodes, init, n_arc);
    em.ib = nodes.size() - 1;
    append_run(nodes, {segment_piece(Vec2(0, 1), Vec2(0, 1.5))}, 9);
    append_run(nodes, {arc_piece(Vec2(0, 0), 1.5, M_PI / 2, -M_PI / 2)},
               std::max<std::size_t>(n_arc / 2, 24));
    close_curve(nodes);
    DiscreteCurve c;
    c.nodes = std::move(nodes);
    em.sys = CurveSystem{{c}};
    std::vector<bool> mask(em.sys.curves[0].size(), true);
    for (std::size_t i = em.ia + 1; i < em.ib; ++i) mask[i] = false;
    em.cs.frozen.push_back(std::move(mask));
    return em;
}

BmEmbed embed_loop(double scale, std::size_t n_petal) {
    BmEmbed em;
    std::vector<Vec2> nodes;
    nodes.push_back(Vec2(1, 0));
    for (const Vec2& q : petal_points(Vec2(1, 0), Vec2(-1, 0), scale, n_petal))
        nodes.push_back(q);
    nodes.push_back(Vec2(1, 0));
    em.ia = 0;
    em.ib = nodes.size() - 1;
    // doubly traversed tail with a small frozen turnaround at its far end
    for (int k = 1; k < 8; ++k) nodes.push_back(Vec2(1.0 + 0.5 * k / 8.0, 0));
    nodes.push_back(Vec2(1.5, 0));
    for (const Vec2& q : petal_points(Vec2(1.5, 0), Vec2(1, 0), 0.08, 16))
        nodes.push_back(q);
    nodes.push_back(Vec2(1.5, 0));
    for (int k = 7; k >= 1; --k) nodes.push_back(Vec2(1.0 + 0.5 * k / 8.0, 0));
    DiscreteCurve c;
    c.nodes = std::move(nodes);
    em.sys = CurveSystem{{c}};
    std::vector<bool> mask(em.sys.curves[0].size(), true);
    for (std::size_t i = 1; i <= n_petal; ++i) mask[i] = false;
    em.cs.frozen.push_back(std::move(mask));
    return em;
}

CandidateResult price_bm(const std::string& name, const BmEmbed& em) {
    SolveOptions opt;
    opt.p = 2.0;
    opt.lambda = 1.0;
    opt.max_iters = 4000;
    opt.grad_tol = 1e-8;
    const SolveResult res = minimize(em.sys, em.cs, opt);

    CandidateResult out;
    out.name = name;
    const DiscreteCurve& c = res.system.curves[0];
    out.bending = chain_energy(c, em.ia, em.ib, 2.0, 0.0);
    out.length = chain_energy(c, em.ia, em.ib, 2.0, 1.0) - out.bending;
    out.energy = out.length + out.bending;
    out.total = 4.0 * out.energy; // all four reconnections, by symmetry
    out.warn = res.warn_line_search;
    return out;
}

} // namespace

ScenarioReport bm_compare(std::size_t resolution) {
    if (resolution < 64) throw InputError("comparison needs resolution >= 64");
    const std::size_t n_arc = std::max<std::size_t>(resolution / 4, 48);
    const std::size_t n_petal = std::max<std::size_t>(resolution / 8, 32);

    ScenarioReport rep;
    rep.p = 2.0;
    rep.lambda = 1.0;

    const CurveSystem bm = make_figbm(resolution);
    CandidateResult cross;
    cross.name = "cross";
    cross.bending = energy_in_ball(bm, Vec2(0, 0), 1.0, 2.0, 0.0);
    cross.length = energy_in_ball(bm, Vec2(0, 0), 1.0, 2.0, 1.0) - cross.bending;
    cross.energy = cross.length + cross.bending;
    cross.total = cross.energy;
    rep.candidates.push_back(cross);

    rep.candidates.push_back(price_bm(
        "arc-quarter", embed_arc({arc_piece(Vec2(1, 1), 1.0, -M_PI / 2, -M_PI / 2)}, n_arc)));
    rep.candidates.push_back(price_bm(
        "arc-diagonal", embed_arc({segment_piece(Vec2(1, 0), Vec2(0, 1))}, n_arc)));
    rep.candidates.push_back(price_bm(
        "arc-deep",
        embed_arc({segment_piece(Vec2(1, 0), Vec2(0.15, 0.15)),
                   segment_piece(Vec2(0.15, 0.15), Vec2(0, 1))},
                  n_arc)));
    rep.candidates.push_back(price_bm("loop-small", embed_loop(0.2, n_petal)));
    rep.candidates.push_back(price_bm("loop-wide", embed_loop(0.35, n_petal)));

    const auto best = std::min_element(
        rep.candidates.begin(), rep.candidates.end(),
        [](const CandidateResult& a, const CandidateResult& b) { return a.total < b.total; });
    rep.winner = best->name;
    rep.notes.push_back(
        "arc candidates price one (1,0)->(0,1) connection (lower bound pi); "
        "loop candidates price one (1,0)->(1,0) connection (lower bound 2 pi)");
    rep.notes.push_back("totals scale single connections to all four endpoints");
    return rep;
}

} // namespace elastica
