#include "elastica/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "elastica/generators.hpp"
#include "elastica/io.hpp"

namespace elastica {

namespace {

// Human-facing number formatting; files use fmt17 instead.
std::string human(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5g", x);
    return buf;
}

std::vector<double> parse_csv_doubles(const std::string& s, std::size_t n,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError(what + ": cannot parse \"" + tok + "\" as a number");
        }
    }
    if (out.size() != n) {
        std::ostringstream msg;
        msg << what << " expects " << n << " comma-separated values";
        throw InputError(msg.str());
    }
    return out;
}

std::size_t node_count(double v) {
    if (v < 3.0 || v != std::floor(v))
        throw InputError("node count must be an integer >= 3");
    return static_cast<std::size_t>(v);
}

CurveSystem generate(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> args;
    auto need = [&](std::size_t k) {
        args = parse_csv_doubles(colon == std::string::npos ? "" : spec.substr(colon + 1),
                                 k, "--gen " + name);
    };
    CurveSystem sys;
    if (name == "circle") {
        need(2);
        sys.curves.push_back(make_circle(args[0], node_count(args[1])));
    } else if (name == "ellipse") {
        need(3);
        sys.curves.push_back(make_ellipse(args[0], args[1], node_count(args[2])));
    } else if (name == "figure-eight") {
        need(1);
        sys.curves.push_back(make_figure_eight(node_count(args[0])));
    } else if (name == "figbm") {
        need(1);
        sys = make_figbm(node_count(args[0]));
    } else if (name == "square") {
        need(2);
        sys.curves.push_back(make_square(args[0], node_count(args[1])));
    } else {
        throw InputError("unknown generator \"" + name +
                         "\" (expected circle, ellipse, figure-eight, figbm, square)");
    }
    return sys;
}

CurveSystem get_input(const std::string& input, const std::string& gen) {
    if (input.empty() == gen.empty())
        throw InputError("provide exactly one of --input or --gen");
    return input.empty() ? generate(gen) : load_system(input);
}

void print_verdicts(std::ostream& out, const std::vector<Verdict>& vs) {
    for (const Verdict& v : vs)
        out << v.name << ": " << human(v.lhs) << " vs " << human(v.rhs) << " "
            << (v.pass ? "ok" : "FAIL") << "\n";
}

// Every node when the system is small, an even stride otherwise.
std::vector<Vec2> node_samples(const CurveSystem& sys, std::size_t cap) {
    std::size_t total = 0;
    for (const DiscreteCurve& c : sys.curves) total += c.size();
    const std::size_t stride = total > cap ? (total + cap - 1) / cap : 1;
    std::vector<Vec2> pts;
    std::size_t k = 0;
    for (const DiscreteCurve& c : sys.curves)
        for (const Vec2& q : c.nodes)
            if (k++ % stride == 0) pts.push_back(q);
    return pts;
}

struct CommonInput {
    std::string input;
    std::string gen;
    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "curve system JSON file");
        cmd->add_option("--gen", gen,
                        "built-in generator: circle:r,n | ellipse:a,b,n | "
                        "figure-eight:n | figbm:n | square:s,n");
    }
    CurveSystem load() const { return get_input(input, gen); }
};

} // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"discrete elastica toolkit"};
    app.set_version_flag("--version",
                         "elastica 1.0.0 (curve-json 1, report-json 1, trace-csv 1)");
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for grid evaluation")
        ->default_val(1);
    app.require_subcommand(1);

    CommonInput energy_in, check_in, mono_in, recon_in, graph_in, cusps_in, min_in,
        render_in;

    auto* cmd_energy = app.add_subcommand("energy", "mass, E_p and F_p of a system");
    energy_in.attach(cmd_energy);
    double energy_p = 2.0, energy_lambda = 1.0;
    cmd_energy->add_option("--p", energy_p)->default_val(2.0);
    cmd_energy->add_option("--lambda", energy_lambda)->default_val(1.0);

    auto* cmd_check = app.add_subcommand("check", "regularity and energy-bound checks");
    check_in.attach(cmd_check);
    double check_p = 2.0, check_snap = 0.0;
    std::string check_out;
    cmd_check->add_option("--p", check_p)->default_val(2.0);
    cmd_check->add_option("--snap-tol", check_snap)->default_val(0.0);
    cmd_check->add_option("--out", check_out, "verdict records JSON");

    auto* cmd_mono = app.add_subcommand("monotonicity", "p=2 monotone quantity A(r)");
    mono_in.attach(cmd_mono);
    std::string mono_center = "0,0", mono_out;
    double mono_rmax = 0.0;
    int mono_steps = 200;
    cmd_mono->add_option("--center", mono_center)->default_val("0,0");
    cmd_mono->add_option("--rmax", mono_rmax, "default 10 x system diameter");
    cmd_mono->add_option("--steps", mono_steps)->default_val(200);
    cmd_mono->add_option("--out", mono_out, "profile CSV")->required();

    auto* cmd_recon = app.add_subcommand("reconstruct", "rasterize the enclosed set");
    recon_in.attach(cmd_recon);
    std::string recon_bbox, recon_res, recon_out;
    cmd_recon->add_option("--bbox", recon_bbox, "x0,y0,x1,y1")->required();
    cmd_recon->add_option("--res", recon_res, "NX,NY")->required();
    cmd_recon->add_option("--out", recon_out, "PGM output")->required();

    auto* cmd_graph = app.add_subcommand("graph", "intersection graph report");
    graph_in.attach(cmd_graph);
    double graph_snap = 0.0, graph_ang = kAngularTol;
    std::string graph_report;
    cmd_graph->add_option("--snap-tol", graph_snap)->default_val(0.0);
    cmd_graph->add_option("--angular-tol", graph_ang)->default_val(kAngularTol);
    cmd_graph->add_option("--report", graph_report, "report JSON");

    auto* cmd_cusps = app.add_subcommand("cusps", "cusp count and parity");
    cusps_in.attach(cmd_cusps);
    double cusps_snap = 0.0;
    cmd_cusps->add_option("--snap-tol", cusps_snap)->default_val(0.0);

    auto* cmd_min = app.add_subcommand("minimize", "gradient descent on F_{lambda,p}");
    min_in.attach(cmd_min);
    std::string min_freeze, min_out, min_trace;
    double min_p = 2.0, min_lambda = 1.0, min_gtol = 1e-8;
    int min_iters = 10000;
    cmd_min->add_option("--freeze", min_freeze, "freeze mask JSON");
    cmd_min->add_option("--p", min_p)->default_val(2.0);
    cmd_min->add_option("--lambda", min_lambda)->default_val(1.0);
    cmd_min->add_option("--iters", min_iters)->default_val(10000);
    cmd_min->add_option("--grad-tol", min_gtol)->default_val(1e-8);
    cmd_min->add_option("--out", min_out, "solved system JSON");
    cmd_min->add_option("--trace", min_trace, "iteration trace CSV");

    auto* cmd_inpaint = app.add_subcommand("inpaint", "two-squares completion scenario");
    double inp_lambda = 0.1, inp_p = 2.0, inp_rho = 0.5;
    int inp_res = 256;
    std::string inp_out;
    cmd_inpaint->add_option("--lambda", inp_lambda)->required();
    cmd_inpaint->add_option("--p", inp_p)->default_val(2.0);
    cmd_inpaint->add_option("--res", inp_res)->default_val(256);
    cmd_inpaint->add_option("--corner-radius", inp_rho)->default_val(0.5);
    cmd_inpaint->add_option("--out", inp_out, "report JSON");

    auto* cmd_bm = app.add_subcommand("bm-compare", "four-petal connection comparison");
    int bm_res = 1024;
    std::string bm_out;
    cmd_bm->add_option("--res", bm_res)->default_val(1024);
    cmd_bm->add_option("--out", bm_out, "report JSON");

    auto* cmd_render = app.add_subcommand("render", "SVG figure of a system");
    render_in.attach(cmd_render);
    std::string render_out;
    cmd_render->add_option("--out", render_out, "SVG output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_energy->parsed()) {
            const CurveSystem sys = energy_in.load();
            const EnergyReport rep = system_energy(sys, energy_p, energy_lambda);
            std::ostringstream pl;
            pl << energy_p;
            out << "mass " << human(rep.mass) << "\n";
            out << "E_" << pl.str() << " " << human(rep.elastic) << "\n";
            out << "F_" << pl.str() << " " << human(rep.total) << "\n";
            return 0;
        }

        if (cmd_check->parsed()) {
            const CurveSystem sys = check_in.load();
            const PlanarGraph graph = extract_graph(sys, check_snap);
            const RegularityReport reg = is_regular(graph);

            std::vector<Verdict> verdicts = holder_chain_check(sys, check_p);
            const std::vector<Verdict> density =
                density_bound_check(sys, check_p, node_samples(sys, 400));
            verdicts.insert(verdicts.end(), density.begin(), density.end());
            std::set<int> bad;
            for (const RegularityOffense& o : reg.offenses) bad.insert(o.vertex);
            verdicts.push_back({"graph_regular", static_cast<double>(bad.size()), 0.0,
                                reg.regular});
            if (!check_out.empty()) write_text(check_out, verdicts_to_json(verdicts));

            if (!reg.regular) {
                bool corners = false;
                for (const DiscreteCurve& c : sys.curves)
                    if (!detect_corners(c).empty()) corners = true;
                out << "irregular vertices: " << bad.size()
                    << "; relaxed energy infinite" << (corners ? " (p-polygon)" : "")
                    << "\n";
                return 1;
            }
            out << "regular\n";
            print_verdicts(out, verdicts);
            for (const Verdict& v : verdicts)
                if (!v.pass) return 1;
            return 0;
        }

        if (cmd_mono->parsed()) {
            const CurveSystem sys = mono_in.load();
            const std::vector<double> ctr = parse_csv_doubles(mono_center, 2, "--center");
            double rmax = mono_rmax > 0.0 ? mono_rmax : 10.0 * system_diameter(sys);
            if (mono_steps < 1) throw InputError("--steps must be positive");
            std::vector<double> radii;
            for (int k = 1; k <= mono_steps; ++k)
                radii.push_back(rmax * k / mono_steps);
            const MonotonicityProfile prof =
                monotonicity_profile(sys, Vec2(ctr[0], ctr[1]), radii);
            write_text(mono_out, profile_to_csv(prof));
            out << "A(rmax) " << human(prof.values.back()) << ", limit estimate "
                << human(prof.limit_estimate) << "\n";
            if (!prof.monotone) {
                out << "nonmonotone at radius " << human(prof.radii[prof.violation_index])
                    << "\n";
                return 1;
            }
            out << "monotone\n";
            return 0;
        }

        if (cmd_recon->parsed()) {
            const CurveSystem sys = recon_in.load();
            const std::vector<double> bb = parse_csv_doubles(recon_bbox, 4, "--bbox");
            const std::vector<double> rr = parse_csv_doubles(recon_res, 2, "--res");
            const int nx = static_cast<int>(rr[0]), ny = static_cast<int>(rr[1]);
            if (nx < 1 || ny < 1 || rr[0] != nx || rr[1] != ny)
                throw InputError("--res needs positive integers");
            const ReconstructionGrid grid = reconstruct_set(
                sys, Vec2(bb[0], bb[1]), Vec2(bb[2], bb[3]), nx, ny, threads);
            save_pgm(grid, recon_out);
            out << "inside " << grid.count(CellLabel::Inside) << ", boundary "
                << grid.count(CellLabel::Boundary) << ", area "
                << human(estimated_area(grid)) << "\n";
            return 0;
        }

        if (cmd_graph->parsed()) {
            const CurveSystem sys = graph_in.load();
            const PlanarGraph graph = extract_graph(sys, graph_snap);
            if (!graph_report.empty())
                write_text(graph_report, graph_report_json(graph, graph_ang));
            const RegularityReport reg = is_regular(graph, graph_ang);
            out << graph.vertices.size() << " vertices, " << graph.edges.size()
                << " edges, " << (reg.regular ? "regular" : "irregular") << "\n";
            return 0;
        }

        if (cmd_cusps->parsed()) {
            const CurveSystem sys = cusps_in.load();
            const PlanarGraph graph = extract_graph(sys, cusps_snap);
            const CuspReport rep = cusp_parity_check(graph);
            if (!rep.applicable) {
                out << "not applicable: graph irregular\n";
                return 1;
            }
            out << "cusps " << rep.cusp_vertices.size() << " (vertices:";
            for (int v : rep.cusp_vertices) out << " " << v;
            out << "), parity " << (rep.parity_even ? "even" : "odd") << "\n";
            return rep.parity_even ? 0 : 1;
        }

        if (cmd_min->parsed()) {
            const CurveSystem sys = min_in.load();
            const ConstraintSet cs = min_freeze.empty()
                                         ? ConstraintSet::all_free(sys)
                                         : load_freeze(min_freeze, sys);
            SolveOptions opt;
            opt.p = min_p;
            opt.lambda = min_lambda;
            opt.max_iters = min_iters;
            opt.grad_tol = min_gtol;
            const SolveResult res = minimize(sys, cs, opt);
            if (!min_out.empty()) save_system(res.system, min_out);
            if (!min_trace.empty()) write_text(min_trace, trace_to_csv(res.trace));
            out << "iterations " << res.iterations << ", "
                << (res.converged ? "converged" : "not converged") << ", F "
                << human(res.report.total) << "\n";
            if (res.warn_line_search)
                err << "warning: line search stalled before the gradient tolerance\n";
            return 0;
        }

        if (cmd_inpaint->parsed()) {
            if (inp_res < 1) throw InputError("--res must be positive");
            const ScenarioReport rep = inpaint_scenario(
                inp_lambda, inp_p, static_cast<std::size_t>(inp_res), inp_rho);
            if (!inp_out.empty()) write_text(inp_out, scenario_report_json(rep));
            for (const CandidateResult& c : rep.candidates)
                out << c.name << ": total " << human(c.total) << " (in-ball energy "
                    << human(c.energy) << ")\n";
            out << "winner " << rep.winner << ", crossover lambda ~ "
                << human(rep.crossover_lambda) << "\n";
            return 0;
        }

        if (cmd_bm->parsed()) {
            if (bm_res < 1) throw InputError("--res must be positive");
            const ScenarioReport rep = bm_compare(static_cast<std::size_t>(bm_res));
            if (!bm_out.empty()) write_text(bm_out, scenario_report_json(rep));
            for (const CandidateResult& c : rep.candidates)
                out << c.name << ": total " << human(c.total) << " (per connection "
                    << human(c.energy) << ")\n";
            out << "winner " << rep.winner << "\n";
            return 0;
        }

        if (cmd_render->parsed()) {
            const CurveSystem sys = render_in.load();
            write_text(render_out, system_to_svg(sys));
            out << "wrote " << render_out << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace elastica
