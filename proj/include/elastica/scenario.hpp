#pragma once

#include <string>
#include <vector>

#include "elastica/solve.hpp"

namespace elastica {

struct CandidateResult {
    std::string name;
    double energy = 0.0;  // F_{lambda,p} of the priced portion after optimization
    double length = 0.0;
    double bending = 0.0;
    double total = 0.0;   // comparable reconnection total (all four endpoints)
    bool warn = false;    // line-search warning during its solve
};

struct ScenarioReport {
    double p = 2.0;
    double lambda = 1.0;
    std::vector<CandidateResult> candidates;
    std::string winner;
    double crossover_lambda = 0.0; // inpainting: estimate where the cross stops winning
    std::vector<std::string> notes;
};

// Inpainting of the two-squares datum: boundary of [0,10]^2 and [-10,0]^2
// (corners rounded at `corner_radius`) with everything inside the unit disc
// removed. Candidate completions: the straight cross through the origin,
// corner-cutting detours, and self-returning loops; each is optimized with
// the datum frozen and the free nodes confined to the disc, then priced by
// its energy inside B_1.
ScenarioReport inpaint_scenario(double lambda, double p, std::size_t resolution,
                                double corner_radius = 0.5);

// Four-petal cross comparison at p = 2, lambda = 1: the cross routing's
// energy inside B_1 against optimized alternative connections
// (1,0) -> (0,1) (priced against pi) and (1,0) -> (1,0) (priced against
// 2 pi), each embedded in a closed curve with frozen tangent tails.
ScenarioReport bm_compare(std::size_t resolution);

} // namespace elastica
