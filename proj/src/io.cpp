#include "elastica/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace elastica {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed on " + path);
}

namespace {

using nlohmann::json;

// Translate a byte offset from the parser into a line:column diagnostic.
[[noreturn]] void rethrow_parse_error(const std::string& text,
                                      const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << " column " << col;
    throw InputError(msg.str());
}

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
    return v;
}

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string vec_json(const Vec2& v) {
    return "[" + fmt17(v.x()) + ", " + fmt17(v.y()) + "]";
}

} // namespace

CurveSystem parse_system(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_parse_error(text, e);
    }
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
        throw InputError("expected an object with a \"curves\" array");
    CurveSystem sys;
    for (const json& jc : doc["curves"]) {
        if (!jc.is_object() || !jc.contains("nodes") || !jc["nodes"].is_array())
            throw InputError("each curve needs a \"nodes\" array");
        DiscreteCurve c;
        for (const json& jn : jc["nodes"]) {
            if (!jn.is_array() || jn.size() != 2)
                throw InputError("each node must be an [x, y] pair");
            c.nodes.emplace_back(finite_number(jn[0], "node coordinate"),
                                 finite_number(jn[1], "node coordinate"));
        }
        if (jc.contains("weight")) {
            if (!jc["weight"].is_number_integer())
                throw InputError("curve weight must be an integer");
            c.weight = jc["weight"].get<int>();
        }
        sys.curves.push_back(std::move(c));
    }
    require_valid(sys);
    return sys;
}

CurveSystem load_system(const std::string& path) {
    return parse_system(read_text(path));
}

std::string system_to_json(const CurveSystem& system) {
    std::ostringstream out;
    out << "{\n  \"curves\": [\n";
    for (std::size_t ci = 0; ci < system.curves.size(); ++ci) {
        const DiscreteCurve& c = system.curves[ci];
        out << "    {\n      \"weight\": " << c.weight << ",\n      \"nodes\": [\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << "        " << vec_json(c.nodes[i])
                << (i + 1 < c.size() ? ",\n" : "\n");
        out << "      ]\n    }" << (ci + 1 < system.curves.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

void save_system(const CurveSystem& system, const std::string& path) {
    write_text(path, system_to_json(system));
}

ConstraintSet parse_freeze(const std::string& text, const CurveSystem& system) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_parse_error(text, e);
    }
    if (!doc.is_object() || !doc.contains("frozen") || !doc["frozen"].is_array())
        throw InputError("expected an object with a \"frozen\" array");
    ConstraintSet cs;
    for (const json& jm : doc["frozen"]) {
        if (!jm.is_array()) throw InputError("each freeze mask must be a list");
        std::vector<bool> mask;
        for (const json& jv : jm) {
            if (jv.is_boolean())
                mask.push_back(jv.get<bool>());
            else if (jv.is_number_integer())
                mask.push_back(jv.get<int>() != 0);
            else
                throw InputError("freeze entries must be 0/1 or booleans");
        }
        cs.frozen.push_back(std::move(mask));
    }
    if (cs.frozen.size() != system.curves.size())
        throw InputError("freeze mask count does not match the system");
    for (std::size_t ci = 0; ci < cs.frozen.size(); ++ci)
        if (cs.frozen[ci].size() != system.curves[ci].size())
            throw InputError("freeze mask length does not match its curve");
    return cs;
}

ConstraintSet load_freeze(const std::string& path, const CurveSystem& system) {
    return parse_freeze(read_text(path), system);
}

void save_pgm(const ReconstructionGrid& grid, const std::string& path) {
    std::ostringstream out;
    out << "P5\n" << grid.nx << " " << grid.ny << "\n255\n";
    for (int iy = grid.ny - 1; iy >= 0; --iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            const CellLabel l = grid.at(ix, iy);
            out.put(l == CellLabel::Inside ? char(255)
                    : l == CellLabel::Boundary ? char(128)
                                               : char(0));
        }
    write_text(path, out.str());

    std::ostringstream side;
    side << "{\n  \"bbox\": [" << fmt17(grid.lo.x()) << ", " << fmt17(grid.lo.y())
         << ", " << fmt17(grid.hi.x()) << ", " << fmt17(grid.hi.y()) << "],\n"
         << "  \"resolution\": [" << grid.nx << ", " << grid.ny << "],\n"
         << "  \"counts\": {\"inside\": " << grid.count(CellLabel::Inside)
         << ", \"boundary\": " << grid.count(CellLabel::Boundary)
         << ", \"outside\": " << grid.count(CellLabel::Outside) << "}\n}\n";
    write_text(path + ".json", side.str());
}

namespace {

const char* stroke_color(int multiplicity) {
    switch (multiplicity) {
        case 1: return "#1f77b4";
        case 2: return "#d62728";
        case 3: return "#2ca02c";
        case 4: return "#9467bd";
        default: return "#7f7f7f";
    }
}

} // namespace

std::string system_to_svg(const CurveSystem& system) {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const DiscreteCurve& c : system.curves)
        for (const Vec2& q : c.nodes) {
            x0 = std::min(x0, q.x());
            y0 = std::min(y0, q.y());
            x1 = std::max(x1, q.x());
            y1 = std::max(y1, q.y());
        }
    const double diag = std::hypot(x1 - x0, y1 - y0);
    const double m = 0.05 * std::max(diag, 1e-12);
    const double sw = 0.006 * std::max(diag, 1e-12);

    std::ostringstream out;
    // y axis flipped so the figure reads with y up
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << fmt17(x0 - m) << " " << fmt17(-(y1 + m)) << " "
        << fmt17(x1 - x0 + 2 * m) << " " << fmt17(y1 - y0 + 2 * m) << "\">\n";
    for (const DiscreteCurve& c : system.curves) {
        out << "  <polygon fill=\"none\" stroke=\"" << stroke_color(c.weight)
            << "\" stroke-width=\"" << fmt17(sw) << "\" points=\"";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << " ";
            out << fmt17(c.nodes[i].x()) << "," << fmt17(-c.nodes[i].y());
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::ostringstream out;
    out << "iter,energy,grad_norm,step\n";
    for (const TraceRow& r : trace)
        out << r.iter << "," << fmt17(r.energy) << "," << fmt17(r.grad_norm) << ","
            << fmt17(r.step) << "\n";
    return out.str();
}

std::string profile_to_csv(const MonotonicityProfile& profile) {
    std::ostringstream out;
    out << "r,A\n";
    for (std::size_t i = 0; i < profile.radii.size(); ++i)
        out << fmt17(profile.radii[i]) << "," << fmt17(profile.values[i]) << "\n";
    return out.str();
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Verdict& v = verdicts[i];
        out << "  {\"name\": \"" << escaped(v.name) << "\", \"lhs\": " << fmt17(v.lhs)
            << ", \"rhs\": " << fmt17(v.rhs) << ", \"pass\": "
            << (v.pass ? "true" : "false") << "}"
            << (i + 1 < verdicts.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return out.str();
}

std::string graph_report_json(const PlanarGraph& graph, double angular_tol) {
    std::ostringstream out;
    out << "{\n  \"vertices\": [";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        out << (i ? ", " : "") << vec_json(graph.vertices[i]);
    out << "],\n  \"edges\": [\n";
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const GraphEdge& e = graph.edges[i];
        out << "    {\"a\": " << e.a << ", \"b\": " << e.b
            << ", \"multiplicity\": " << e.multiplicity << ", \"tangent_a\": "
            << vec_json(e.tangent_a) << ", \"tangent_b\": " << vec_json(e.tangent_b)
            << ", \"chain\": [";
        for (std::size_t k = 0; k < e.chain.size(); ++k)
            out << (k ? ", " : "") << vec_json(e.chain[k]);
        out << "]}" << (i + 1 < graph.edges.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"directional\": [\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const VertexDirectionalReport rep =
            directional_densities(graph, static_cast<int>(v), angular_tol);
        out << "    {\"vertex\": " << v << ", \"local_density\": "
            << rep.local_density << ", \"directions\": [";
        for (std::size_t k = 0; k < rep.directions.size(); ++k) {
            const DirectionEntry& d = rep.directions[k];
            out << (k ? ", " : "") << "{\"w\": " << vec_json(d.w)
                << ", \"rho_plus\": " << d.rho_plus << ", \"rho_minus\": "
                << d.rho_minus << "}";
        }
        out << "]}" << (v + 1 < graph.vertices.size() ? ",\n" : "\n");
    }
    const RegularityReport reg = is_regular(graph, angular_tol);
    out << "  ],\n  \"regularity\": {\"regular\": " << (reg.regular ? "true" : "false")
        << ", \"infinite_relaxed_energy\": "
        << (reg.infinite_relaxed_energy ? "true" : "false") << ", \"offenses\": [";
    for (std::size_t k = 0; k < reg.offenses.size(); ++k) {
        const RegularityOffense& o = reg.offenses[k];
        out << (k ? ", " : "") << "{\"vertex\": " << o.vertex << ", \"direction\": "
            << vec_json(o.direction) << ", \"rho_plus\": " << o.rho_plus
            << ", \"rho_minus\": " << o.rho_minus << "}";
    }
    out << "]},\n";
    const CuspReport cusps = cusp_parity_check(graph, angular_tol);
    out << "  \"cusps\": {\"applicable\": " << (cusps.applicable ? "true" : "false")
        << ", \"parity_even\": " << (cusps.parity_even ? "true" : "false")
        << ", \"cusp_vertices\": [";
    for (std::size_t k = 0; k < cusps.cusp_vertices.size(); ++k)
        out << (k ? ", " : "") << cusps.cusp_vertices[k];
    out << "]}\n}\n";
    return out.str();
}

std::string scenario_report_json(const ScenarioReport& report) {
    std::ostringstream out;
    out << "{\n  \"p\": " << fmt17(report.p) << ",\n  \"lambda\": "
        << fmt17(report.lambda) << ",\n  \"winner\": \"" << escaped(report.winner)
        << "\",\n  \"crossover_lambda\": " << fmt17(report.crossover_lambda)
        << ",\n  \"candidates\": [\n";
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const CandidateResult& c = report.candidates[i];
        out << "    {\"name\": \"" << escaped(c.name) << "\", \"energy\": "
            << fmt17(c.energy) << ", \"length\": " << fmt17(c.length)
            << ", \"bending\": " << fmt17(c.bending) << ", \"total\": "
            << fmt17(c.total) << ", \"warn\": " << (c.warn ? "true" : "false") << "}"
            << (i + 1 < report.candidates.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"notes\": [";
    for (std::size_t i = 0; i < report.notes.size(); ++i)
        out << (i ? ", " : "") << "\"" << escaped(report.notes[i]) << "\"";
    out << "]\n}\n";
    return out.str();
}

} // namespace elastica
