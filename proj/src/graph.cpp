#include "elastica/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "elastica/geom.hpp"

namespace elastica {

std::vector<std::size_t> detect_corners(const DiscreteCurve& curve,
                                        double theta_corner) {
    require_valid(curve);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    const std::vector<double> phi = turning_angles(curve);
    std::vector<double> elen(static_cast<std::size_t>(n));
    for (std::ptrdiff_t i = 0; i < n; ++i)
        elen[static_cast<std::size_t>(i)] = curve.edge(i).norm();
    auto dual = [&](std::ptrdiff_t i) {
        return 0.5 * (elen[static_cast<std::size_t>(((i - 1) % n + n) % n)] +
                      elen[static_cast<std::size_t>(i)]);
    };

    // A corner is a turning angle well above what the surrounding curvature
    // would produce over this node's dual length. Uniform refinement of a
    // smooth curve shrinks kappa * ell, a corner's angle stays put.
    std::vector<std::size_t> corners;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = std::abs(phi[static_cast<std::size_t>(i)]);
        if (a <= theta_corner) continue;
        std::vector<double> local;
        for (std::ptrdiff_t off : {-4, -3, -2, 2, 3, 4}) {
            const std::size_t j = static_cast<std::size_t>(((i + off) % n + n) % n);
            local.push_back(std::abs(phi[j]) / dual(static_cast<std::ptrdiff_t>(j)));
        }
        std::nth_element(local.begin(), local.begin() + 3, local.end());
        const double kappa_loc = local[3];
        if (a - kappa_loc * dual(i) > 0.5 * theta_corner)
            corners.push_back(static_cast<std::size_t>(i));
    }
    return corners;
}

namespace {

struct AugPoint {
    Vec2 pos;
    int cut = -1; // index into the cut-point table, -1 if ordinary
};

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Vec2 chain_tangent(const std::vector<Vec2>& chain, bool from_front) {
    const std::size_t n = chain.size();
    auto at = [&](std::size_t k) { return from_front ? chain[k] : chain[n - 1 - k]; };
    const Vec2 p0 = at(0);
    Vec2 q1(0, 0), q2(0, 0);
    double s1 = 0.0, s2 = 0.0;
    bool have1 = false, have2 = false;
    double s = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        s += (at(k) - at(k - 1)).norm();
        if (!have1 && (at(k) - p0).norm() > 0) {
            q1 = at(k);
            s1 = s;
            have1 = true;
        } else if (have1 && s > 1.5 * s1) {
            q2 = at(k);
            s2 = s;
            have2 = true;
            break;
        }
    }
    if (!have1) return Vec2(0, 0);
    const Vec2 u1 = (q1 - p0).normalized();
    if (!have2) return u1;
    // Chord directions rotate linearly in arclength on an arc; extrapolate
    // back to zero chord so discretization does not tilt the end tangent.
    const Vec2 u2 = (q2 - p0).normalized();
    const double delta = std::atan2(cross2(u1, u2), u1.dot(u2));
    const double back = -s1 * delta / (s2 - s1);
    const double c = std::cos(back), sn = std::sin(back);
    return Vec2(c * u1.x() - sn * u1.y(), sn * u1.x() + c * u1.y());
}

double chain_length(const std::vector<Vec2>& chain) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        s += (chain[i + 1] - chain[i]).norm();
    return s;
}

std::vector<Vec2> sample_chain(const std::vector<Vec2>& chain, std::size_t k) {
    const double total = chain_length(chain);
    std::vector<Vec2> out;
    out.reserve(k);
    std::size_t seg = 0;
    double base = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double s = total * static_cast<double>(j) / static_cast<double>(k - 1);
        while (seg + 2 < chain.size() &&
               base + (chain[seg + 1] - chain[seg]).norm() < s) {
            base += (chain[seg + 1] - chain[seg]).norm();
            ++seg;
        }
        const double len = (chain[seg + 1] - chain[seg]).norm();
        const double t = (len > 0) ? std::clamp((s - base) / len, 0.0, 1.0) : 0.0;
        out.push_back(chain[seg] + t * (chain[seg + 1] - chain[seg]));
    }
    return out;
}

bool chains_coincide(const std::vector<Vec2>& u, const std::vector<Vec2>& v, double tol) {
    if (std::abs(chain_length(u) - chain_length(v)) > 8.0 * tol) return false;
    const std::size_t k = 17;
    const std::vector<Vec2> su = sample_chain(u, k);
    const std::vector<Vec2> sv = sample_chain(v, k);
    for (std::size_t j = 0; j < k; ++j)
        if ((su[j] - sv[j]).norm() > tol) return false;
    return true;
}

std::vector<Vec2> reversed(std::vector<Vec2> c) {
    std::reverse(c.begin(), c.end());
    return c;
}

void set_tangents(GraphEdge& e) {
    e.tangent_a = chain_tangent(e.chain, true);
    e.tangent_b = chain_tangent(e.chain, false);
}

} // namespace

PlanarGraph extract_graph(const CurveSystem& system, double snap_tol) {
    require_valid(system);
    if (snap_tol <= 0.0) snap_tol = kSnapTolRel * system_bbox_diagonal(system);
    const std::size_t nc = system.curves.size();

    // Phase 1: per-edge cut parameters (t in [0,1), node cuts at t = 0).
    std::vector<std::vector<std::vector<double>>> events(nc);
    for (std::size_t ci = 0; ci < nc; ++ci)
        events[ci].resize(system.curves[ci].size());

    auto add_event = [&](std::size_t ci, std::size_t edge, double t) {
        const DiscreteCurve& c = system.curves[ci];
        const std::size_t n = c.size();
        const double len = c.edge(static_cast<std::ptrdiff_t>(edge)).norm();
        const double eps_t = snap_tol / len;
        if (t > 1.0 - eps_t) {
            events[ci][(edge + 1) % n].push_back(0.0);
        } else if (t < eps_t) {
            events[ci][edge].push_back(0.0);
        } else {
            events[ci][edge].push_back(t);
        }
    };

    for (std::size_t ci = 0; ci < nc; ++ci)
        for (std::size_t idx : detect_corners(system.curves[ci]))
            events[ci][idx].push_back(0.0);

    for (std::size_t ci = 0; ci < nc; ++ci) {
        const DiscreteCurve& a = system.curves[ci];
        const std::size_t na = a.size();
        for (std::size_t cj = ci; cj < nc; ++cj) {
            const DiscreteCurve& b = system.curves[cj];
            const std::size_t nb = b.size();
            for (std::size_t i = 0; i < na; ++i) {
                const std::size_t jstart = (ci == cj) ? i : 0;
                for (std::size_t j = jstart; j < nb; ++j) {
                    if (ci == cj) {
                        const std::size_t d = (j - i) % na;
                        if (d == 0 || d == 1 || d == na - 1) continue;
                    }
                    const auto hit = intersect_segments(
                        a.node(static_cast<std::ptrdiff_t>(i)),
                        a.node(static_cast<std::ptrdiff_t>(i) + 1),
                        b.node(static_cast<std::ptrdiff_t>(j)),
                        b.node(static_cast<std::ptrdiff_t>(j) + 1));
                    if (!hit) continue;
                    add_event(ci, i, hit->t0);
                    add_event(cj, j, hit->t1);
                }
            }
        }
    }

    // Node-to-segment proximity: coincident runs and tangency contacts.
    for (std::size_t ci = 0; ci < nc; ++ci) {
        const DiscreteCurve& a = system.curves[ci];
        const std::size_t na = a.size();
        for (std::size_t i = 0; i < na; ++i) {
            const Vec2 p = a.nodes[i];
            for (std::size_t cj = 0; cj < nc; ++cj) {
                const DiscreteCurve& b = system.curves[cj];
                const std::size_t nb = b.size();
                for (std::size_t j = 0; j < nb; ++j) {
                    if (ci == cj) {
                        const std::ptrdiff_t na_s = static_cast<std::ptrdiff_t>(na);
                        const std::ptrdiff_t d =
                            ((static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j)) % na_s + na_s) % na_s;
                        if (d == 0 || d == 1) continue; // adjacent to the node
                    }
                    const Vec2 qa = b.node(static_cast<std::ptrdiff_t>(j));
                    const Vec2 qb = b.node(static_cast<std::ptrdiff_t>(j) + 1);
                    if (dist_point_segment(p, qa, qb) > snap_tol) continue;
                    add_event(ci, i, 0.0);
                    add_event(cj, j, project_point_segment(p, qa, qb));
                }
            }
        }
    }

    // Phase 2: augmented node sequences with deduplicated cut positions.
    std::vector<Vec2> cut_pts;
    std::vector<std::vector<AugPoint>> aug(nc);
    for (std::size_t ci = 0; ci < nc; ++ci) {
        const DiscreteCurve& c = system.curves[ci];
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double>& ts = events[ci][i];
            std::sort(ts.begin(), ts.end());
            const double len = c.edge(static_cast<std::ptrdiff_t>(i)).norm();
            const double eps_t = snap_tol / len;
            AugPoint node{c.nodes[i], -1};
            if (!ts.empty() && ts.front() < eps_t) {
                node.cut = static_cast<int>(cut_pts.size());
                cut_pts.push_back(node.pos);
            }
            aug[ci].push_back(node);
            double last = 0.0;
            for (double t : ts) {
                if (t < eps_t || t - last < eps_t) continue;
                last = t;
                AugPoint q{c.nodes[i] + t * c.edge(static_cast<std::ptrdiff_t>(i)),
                           static_cast<int>(cut_pts.size())};
                cut_pts.push_back(q.pos);
                aug[ci].push_back(q);
            }
        }
    }

    // Phase 3: cluster cut points into graph vertices.
    UnionFind uf(cut_pts.size());
    for (std::size_t i = 0; i < cut_pts.size(); ++i)
        for (std::size_t j = i + 1; j < cut_pts.size(); ++j)
            if ((cut_pts[i] - cut_pts[j]).norm() <= snap_tol) uf.unite(i, j);

    std::map<std::size_t, int> root_to_vertex;
    std::vector<Vec2> centroid_sum;
    std::vector<int> centroid_count;
    std::vector<int> cut_vertex(cut_pts.size(), -1);
    for (std::size_t i = 0; i < cut_pts.size(); ++i) {
        const std::size_t r = uf.find(i);
        auto it = root_to_vertex.find(r);
        int v;
        if (it == root_to_vertex.end()) {
            v = static_cast<int>(centroid_sum.size());
            root_to_vertex.emplace(r, v);
            centroid_sum.push_back(Vec2(0, 0));
            centroid_count.push_back(0);
        } else {
            v = it->second;
        }
        cut_vertex[i] = v;
        centroid_sum[static_cast<std::size_t>(v)] += cut_pts[i];
        centroid_count[static_cast<std::size_t>(v)] += 1;
    }
    PlanarGraph graph;
    for (std::size_t v = 0; v < centroid_sum.size(); ++v)
        graph.vertices.push_back(centroid_sum[v] / centroid_count[v]);
    for (std::size_t i = 0; i < cut_pts.size(); ++i) {
        const Vec2 ctr = graph.vertices[static_cast<std::size_t>(cut_vertex[i])];
        if ((cut_pts[i] - ctr).norm() > 5.0 * snap_tol) {
            std::ostringstream os;
            os << "ambiguous junction cluster near (" << ctr.x() << "," << ctr.y()
               << "): spread exceeds 5x snap tolerance";
            throw InputError(os.str());
        }
    }

    // Phase 4: split each curve's cyclic sequence at its cut points.
    for (std::size_t ci = 0; ci < nc; ++ci) {
        const std::vector<AugPoint>& pts = aug[ci];
        const std::size_t m = pts.size();
        const int w = system.curves[ci].weight;
        std::vector<std::size_t> cuts;
        for (std::size_t i = 0; i < m; ++i)
            if (pts[i].cut >= 0) cuts.push_back(i);
        if (cuts.empty()) {
            GraphEdge loop;
            loop.a = loop.b = -1;
            loop.multiplicity = w;
            for (const AugPoint& q : pts) loop.chain.push_back(q.pos);
            set_tangents(loop);
            graph.edges.push_back(std::move(loop));
            continue;
        }
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            const std::size_t i0 = cuts[k];
            const std::size_t i1 = cuts[(k + 1) % cuts.size()];
            const int va = cut_vertex[static_cast<std::size_t>(pts[i0].cut)];
            const int vb = cut_vertex[static_cast<std::size_t>(pts[i1].cut)];
            GraphEdge e;
            e.a = va;
            e.b = vb;
            e.multiplicity = w;
            e.chain.push_back(graph.vertices[static_cast<std::size_t>(va)]);
            for (std::size_t i = (i0 + 1) % m; i != i1; i = (i + 1) % m) {
                const Vec2 q = pts[i].pos;
                if ((q - e.chain.back()).norm() > 0.25 * snap_tol) e.chain.push_back(q);
            }
            const Vec2 endp = graph.vertices[static_cast<std::size_t>(vb)];
            if ((endp - e.chain.back()).norm() > 0.25 * snap_tol)
                e.chain.push_back(endp);
            else
                e.chain.back() = endp;
            if (e.chain.size() < 2) continue;
            if (va == vb && chain_length(e.chain) < 2.0 * snap_tol) continue;
            set_tangents(e);
            graph.edges.push_back(std::move(e));
        }
    }

    // Phase 5: merge coincident chains, summing multiplicity.
    const double merge_tol = 3.0 * snap_tol;
    std::vector<GraphEdge> merged;
    for (GraphEdge& e : graph.edges) {
        bool absorbed = false;
        for (GraphEdge& f : merged) {
            if (f.a < 0 || e.a < 0) continue;
            const bool same = (f.a == e.a && f.b == e.b);
            const bool swapped = (f.a == e.b && f.b == e.a);
            if (!same && !swapped) continue;
            if (same && chains_coincide(f.chain, e.chain, merge_tol)) {
                f.multiplicity += e.multiplicity;
                absorbed = true;
                break;
            }
            if ((swapped || (same && f.a == f.b)) &&
                chains_coincide(f.chain, reversed(e.chain), merge_tol)) {
                f.multiplicity += e.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(std::move(e));
    }
    graph.edges = std::move(merged);

    // Phase 6: dissolve pass-through vertices (degree 2, equal multiplicity,
    // anti-parallel tangents).
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::pair<std::size_t, int>>> inc(graph.vertices.size());
        for (std::size_t ei = 0; ei < graph.edges.size(); ++ei) {
            const GraphEdge& e = graph.edges[ei];
            if (e.a >= 0) inc[static_cast<std::size_t>(e.a)].push_back({ei, 0});
            if (e.b >= 0) inc[static_cast<std::size_t>(e.b)].push_back({ei, 1});
        }
        for (std::size_t v = 0; v < inc.size(); ++v) {
            if (inc[v].size() != 2) continue;
            const auto [e1i, end1] = inc[v][0];
            const auto [e2i, end2] = inc[v][1];
            GraphEdge& e1 = graph.edges[e1i];
            GraphEdge& e2 = graph.edges[e2i];
            if (e1.multiplicity != e2.multiplicity) continue;
            const Vec2 t1 = end1 == 0 ? e1.tangent_a : e1.tangent_b;
            const Vec2 t2 = end2 == 0 ? e2.tangent_a : e2.tangent_b;
            // Pass-through means the two branches continue each other.
            if (std::acos(std::clamp(-t1.dot(t2), -1.0, 1.0)) > kThetaCorner) continue;
            if (e1i == e2i) {
                // A chain with both ends here closes into a free loop.
                e1.a = e1.b = -1;
                e1.chain.pop_back();
                set_tangents(e1);
            } else {
                // Orient e1 to end at v and e2 to start at v, then splice.
                if (end1 == 0) {
                    e1.chain = reversed(e1.chain);
                    std::swap(e1.a, e1.b);
                }
                if (end2 == 1) {
                    e2.chain = reversed(e2.chain);
                    std::swap(e2.a, e2.b);
                }
                e1.chain.insert(e1.chain.end(), e2.chain.begin() + 1, e2.chain.end());
                e1.b = e2.b;
                set_tangents(e1);
                graph.edges.erase(graph.edges.begin() + static_cast<std::ptrdiff_t>(e2i));
            }
            changed = true;
            break;
        }
    }

    // Drop vertices that no edge references any more.
    std::vector<int> remap(graph.vertices.size(), -1);
    std::vector<Vec2> kept;
    for (const GraphEdge& e : graph.edges)
        for (int v : {e.a, e.b})
            if (v >= 0 && remap[static_cast<std::size_t>(v)] < 0) {
                remap[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
                kept.push_back(graph.vertices[static_cast<std::size_t>(v)]);
            }
    for (GraphEdge& e : graph.edges) {
        if (e.a >= 0) e.a = remap[static_cast<std::size_t>(e.a)];
        if (e.b >= 0) e.b = remap[static_cast<std::size_t>(e.b)];
    }
    graph.vertices = std::move(kept);
    return graph;
}

namespace {

double dir_angle(const Vec2& t) {
    double a = std::atan2(t.y(), t.x());
    if (a < 0) a += M_PI;
    if (a >= M_PI) a -= M_PI;
    return a;
}

} // namespace

VertexDirectionalReport directional_densities(const PlanarGraph& graph, int vertex,
                                              double angular_tol) {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= graph.vertices.size())
        throw InputError("directional_densities: vertex index out of range");
    struct End {
        Vec2 t;
        int m;
        double angle;
    };
    std::vector<End> ends;
    for (const GraphEdge& e : graph.edges) {
        if (e.a == vertex) ends.push_back({e.tangent_a, e.multiplicity, dir_angle(e.tangent_a)});
        if (e.b == vertex) ends.push_back({e.tangent_b, e.multiplicity, dir_angle(e.tangent_b)});
    }
    VertexDirectionalReport rep;
    rep.vertex = graph.vertices[static_cast<std::size_t>(vertex)];
    for (const End& e : ends) rep.local_density += e.m;
    if (ends.empty()) return rep;

    // Cluster angles on the half-circle (directions modulo sign). Start
    // after the widest gap so the wrap at pi never splits a cluster.
    std::sort(ends.begin(), ends.end(),
              [](const End& u, const End& v) { return u.angle < v.angle; });
    const std::size_t n = ends.size();
    std::size_t start = 0;
    double widest = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gap = (i + 1 < n) ? ends[i + 1].angle - ends[i].angle
                                       : ends[0].angle + M_PI - ends[i].angle;
        if (gap > widest) {
            widest = gap;
            start = (i + 1) % n;
        }
    }
    std::vector<std::vector<const End*>> clusters;
    double prev_angle = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const End& e = ends[(start + k) % n];
        double a = e.angle;
        if (k > 0 && a < prev_angle) a += M_PI; // unwrapped
        if (k == 0 || a - prev_angle > angular_tol)
            clusters.emplace_back();
        clusters.back().push_back(&e);
        prev_angle = a;
    }

    std::vector<double> means;
    for (const auto& cl : clusters) {
        // Mean direction via doubled-angle averaging (stable modulo sign).
        double sx = 0.0, sy = 0.0;
        for (const End* e : cl) {
            sx += std::cos(2.0 * e->angle);
            sy += std::sin(2.0 * e->angle);
        }
        means.push_back(0.5 * std::atan2(sy, sx));
    }
    for (std::size_t i = 0; i < means.size(); ++i)
        for (std::size_t j = i + 1; j < means.size(); ++j) {
            double d = std::abs(means[i] - means[j]);
            d = std::min(d, M_PI - std::fmod(d, M_PI));
            if (d < 2.0 * angular_tol)
                throw InputError("direction clustering ambiguous: two clusters closer "
                                 "than twice the angular tolerance");
        }

    for (std::size_t i = 0; i < clusters.size(); ++i) {
        DirectionEntry entry;
        entry.w = Vec2(std::cos(means[i]), std::sin(means[i]));
        for (const End* e : clusters[i]) {
            if (e->t.dot(entry.w) > 0)
                entry.rho_plus += e->m;
            else
                entry.rho_minus += e->m;
        }
        rep.directions.push_back(entry);
    }
    return rep;
}

RegularityReport is_regular(const PlanarGraph& graph, double angular_tol) {
    RegularityReport rep;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const VertexDirectionalReport vr =
            directional_densities(graph, static_cast<int>(v), angular_tol);
        for (const DirectionEntry& d : vr.directions)
            if (d.rho_plus != d.rho_minus)
                rep.offenses.push_back(
                    {static_cast<int>(v), d.w, d.rho_plus, d.rho_minus});
    }
    rep.regular = rep.offenses.empty();
    rep.infinite_relaxed_energy = !rep.regular;
    return rep;
}

CuspReport cusp_parity_check(const PlanarGraph& graph,
                             const std::vector<bool>& edge_odd, double angular_tol) {
    if (edge_odd.size() != graph.edges.size())
        throw InputError("cusp_parity_check: marking size mismatch");
    CuspReport rep;
    if (!is_regular(graph, angular_tol).regular) return rep; // vacuous
    rep.applicable = true;
    std::vector<long> rho(graph.vertices.size(), 0);
    for (std::size_t ei = 0; ei < graph.edges.size(); ++ei) {
        const GraphEdge& e = graph.edges[ei];
        const int m = e.multiplicity;
        const int halved = edge_odd[ei] ? (m - 1) / 2 : m / 2;
        if (halved == 0) continue;
        if (e.a >= 0) rho[static_cast<std::size_t>(e.a)] += halved;
        if (e.b >= 0) rho[static_cast<std::size_t>(e.b)] += halved;
    }
    for (std::size_t v = 0; v < rho.size(); ++v)
        if (rho[v] % 2 != 0) rep.cusp_vertices.push_back(static_cast<int>(v));
    rep.parity_even = rep.cusp_vertices.size() % 2 == 0;
    return rep;
}

CuspReport cusp_parity_check(const PlanarGraph& graph, double angular_tol) {
    std::vector<bool> odd;
    odd.reserve(graph.edges.size());
    for (const GraphEdge& e : graph.edges) odd.push_back(e.multiplicity % 2 != 0);
    return cusp_parity_check(graph, odd, angular_tol);
}

} // namespace elastica
