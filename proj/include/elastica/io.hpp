#pragma once

#include <string>
#include <vector>

#include "elastica/graph.hpp"
#include "elastica/scenario.hpp"
#include "elastica/solve.hpp"
#include "elastica/system.hpp"
#include "elastica/winding.hpp"

namespace elastica {

// One double, shortest text that round-trips exactly (17 significant digits).
std::string fmt17(double x);

// Curve JSON: {"curves":[{"weight":w,"nodes":[[x,y],...]},...]}. weight is
// optional on input and defaults to 1. Parse failures throw InputError with
// a line:column diagnostic.
CurveSystem parse_system(const std::string& text);
CurveSystem load_system(const std::string& path);
std::string system_to_json(const CurveSystem& system);
void save_system(const CurveSystem& system, const std::string& path);

// Freeze-mask JSON: {"frozen":[[0,1,...],...]}, one 0/1 list per curve.
ConstraintSet parse_freeze(const std::string& text, const CurveSystem& system);
ConstraintSet load_freeze(const std::string& path, const CurveSystem& system);

// Binary PGM (P5), top row first: inside 255, boundary 128, outside 0.
// A sidecar at path + ".json" records the bbox, resolution and label counts.
void save_pgm(const ReconstructionGrid& grid, const std::string& path);

// Multiplicity-colored strokes on a fixed viewBox; byte-identical per input.
std::string system_to_svg(const CurveSystem& system);

std::string trace_to_csv(const std::vector<TraceRow>& trace);
std::string profile_to_csv(const MonotonicityProfile& profile);

std::string verdicts_to_json(const std::vector<Verdict>& verdicts);
std::string graph_report_json(const PlanarGraph& graph,
                              double angular_tol = kAngularTol);
std::string scenario_report_json(const ScenarioReport& report);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

} // namespace elastica
