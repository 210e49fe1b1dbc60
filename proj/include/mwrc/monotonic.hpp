#pragma once

// Certified global maximization of the single-ratio GEE over the power box,
// used as the ground truth the alternating solver is measured against.
//
// The Dinkelbach subproblem at a given lambda,
//     F(p) = alpha C(gamma(p_s, p_r)) - lambda (phi p_s + psi p_r + p_c),
// is maximized by branch and bound on p_r intervals. gamma is increasing in
// both powers, so for p_r in [l, u]
//     max_{p_s, p_r} F  <=  max_{p_s} [alpha C(gamma(p_s, u)) - lambda phi p_s]
//                           - lambda psi l - lambda p_c,
// and the restriction to p_r = u is concave in p_s (one golden-section
// solve per interval, which also yields a feasible incumbent at p_r = u).
// Best-first splitting tightens the bound monotonically; the search stops
// once the best outstanding bound is within eps_mono of the incumbent.

#include "mwrc/core.hpp"
#include "mwrc/fractional.hpp"
#include "mwrc/gee.hpp"

namespace mwrc::monotonic {

struct MonotonicOptions {
    double eps_mono = 1e-6;   // absolute certificate on the subproblem value
    int node_budget = 100000; // max intervals processed per subproblem
};

struct InnerResult {
    gee::PowerProfile profile;
    double value = 0.0;      // F at the returned profile
    double bound_gap = 0.0;  // best outstanding upper bound minus value
    int iterations = 0;      // intervals processed
};

// Globally maximize F(p) over [0, p_s_max] x [0, p_r_max] to within
// eps_mono. Throws NonConvergenceError if the interval budget runs out.
InnerResult inner_subproblem_global(const gee::Gee2Params& q, const gee::PowerCost& cost,
                                    const PowerLimits& limits, double lambda,
                                    const MonotonicOptions& opt = {});

// Global GEE maximizer: Dinkelbach outer loop with the certified subproblem
// solver inside. The reported gee is the rate/power ratio evaluated at the
// returned profile.
fractional::SolveReport gee2_global(const gee::Gee2Params& q, const gee::PowerCost& cost,
                                    const PowerLimits& limits, double eps = 1e-8,
                                    const MonotonicOptions& opt = {});

}  // namespace mwrc::monotonic
